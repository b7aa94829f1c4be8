#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "twoadic/bigint.hpp"

using twoadic::BigUint;
using oracle::cpp_int;

TEST_CASE("BigUint basic values")
{
    CHECK(BigUint().is_zero());
    CHECK(BigUint(0).is_zero());
    CHECK(BigUint(5).to_decimal() == "5");
    CHECK(BigUint::mersenne(52).to_decimal() == "4503599627370495");
    CHECK(BigUint::power_of_two(64).to_decimal() == "18446744073709551616");
    CHECK(BigUint::mersenne(64).bit_length() == 64);
    CHECK(BigUint::mersenne(0).is_zero());
    CHECK(BigUint::from_decimal("340282366920938463463374607431768211456") == BigUint::power_of_two(128));
    CHECK_THROWS_AS(BigUint(3) - BigUint(4), std::domain_error);
    CHECK_THROWS_AS(BigUint(3) / BigUint(), std::domain_error);
    CHECK_THROWS_AS((void)BigUint::from_decimal("12a"), std::invalid_argument);
}

TEST_CASE("gcd edge cases")
{
    CHECK(gcd(BigUint(), BigUint(12)) == BigUint(12));
    CHECK(gcd(BigUint(12), BigUint()) == BigUint(12));
    CHECK(gcd(BigUint(12), BigUint(18)) == BigUint(6));
    CHECK(gcd(BigUint::mersenne(52), BigUint(5)) == BigUint(5));
    CHECK(gcd(BigUint::mersenne(12), BigUint::mersenne(18)) == BigUint::mersenne(6));
}

TEST_CASE("BigUint agrees with cpp_int on random operands")
{
    std::mt19937_64 rng(0xb16b00b5);
    for (int iter = 0; iter < 2000; ++iter)
    {
        const cpp_int a = oracle::random_bits(rng, 700);
        cpp_int b = oracle::random_bits(rng, 400);
        const BigUint x = oracle::from_cpp(a), y = oracle::from_cpp(b);
        REQUIRE(oracle::to_cpp(x) == a);

        CHECK(oracle::to_cpp(x + y) == a + b);
        CHECK(oracle::to_cpp(x * y) == a * b);
        if (a >= b) CHECK(oracle::to_cpp(x - y) == a - b);
        const unsigned sh = unsigned(rng() % 300);
        CHECK(oracle::to_cpp(x << sh) == (a << sh));
        CHECK(oracle::to_cpp(x >> sh) == (a >> sh));
        CHECK(((x <=> y) < 0) == (a < b));
        CHECK(x.bit_length() == (a == 0 ? 0u : unsigned(msb(a)) + 1));
        CHECK(x.to_decimal() == a.str());
        CHECK(oracle::to_cpp(gcd(x, y)) == boost::multiprecision::gcd(a, b));
        if (b != 0)
        {
            const auto [q, r] = BigUint::divmod(x, y);
            CHECK(oracle::to_cpp(q) == a / b);
            CHECK(oracle::to_cpp(r) == a % b);
        }
        const std::uint64_t small = rng() | 1;
        CHECK(cpp_int(x.mod_u64(small)) == a % small);
    }
}

TEST_CASE("division hits the rare add-back branch")
{
    // Operands with many high one-bits force qhat corrections in Knuth D.
    for (unsigned n = 65; n < 400; n += 7)
    {
        const BigUint x = BigUint::mersenne(2 * n);
        const BigUint y = BigUint::mersenne(n) - BigUint(1);
        const auto [q, r] = BigUint::divmod(x, y);
        CHECK(q * y + r == x);
        CHECK(r < y);
    }
}

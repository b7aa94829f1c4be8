#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "twoadic/error.hpp"
#include "twoadic/numtheory.hpp"

using namespace twoadic;

TEST_CASE("is_prime")
{
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(561));
    CHECK(is_prime(2));
    CHECK(is_prime(18446744073709551557ull));       // largest 64-bit prime
    CHECK_FALSE(is_prime(3215031751ull));            // strong pseudoprime to bases 2, 3, 5, 7
    CHECK_FALSE(is_prime(3825123056546413051ull));   // strong pseudoprime to bases up to 23
    for (std::uint64_t n = 0; n < 20000; ++n) REQUIRE(is_prime(n) == oracle::trial_division_is_prime(n));
}

TEST_CASE("primitive roots")
{
    CHECK(smallest_primitive_root(13) == 2);
    CHECK(smallest_primitive_root(5) == 2);
    CHECK(smallest_primitive_root(7) == 3);
    CHECK(all_primitive_roots(5) == std::vector<std::uint64_t>{2, 3});
    CHECK(all_primitive_roots(13) == std::vector<std::uint64_t>{2, 6, 7, 11});
    CHECK(all_primitive_roots(3) == std::vector<std::uint64_t>{2});
    CHECK_THROWS_AS((void)smallest_primitive_root(12), IneligiblePrime);
    CHECK_THROWS_AS((void)all_primitive_roots(15), IneligiblePrime);

    for (std::uint64_t p = 3; p < 400; ++p)
    {
        if (!oracle::trial_division_is_prime(p)) continue;
        std::vector<std::uint64_t> brute;
        for (std::uint64_t g = 1; g < p; ++g)
        {
            if (oracle::brute_order(g, p) == p - 1) brute.push_back(g);
        }
        REQUIRE(all_primitive_roots(p) == brute);
        REQUIRE(brute.size() == oracle::euler_phi(p - 1));
        REQUIRE(smallest_primitive_root(p) == brute.front());
    }
}

TEST_CASE("legendre_symbol")
{
    CHECK(legendre_symbol(0, 5) == 0);
    CHECK(legendre_symbol(2, 13) == -1);
    CHECK(legendre_symbol(-1, 13) == 1);
    CHECK(legendre_symbol(15, 13) == legendre_symbol(2, 13));
    CHECK_THROWS_AS((void)legendre_symbol(1, 8), Error);
    CHECK_THROWS_AS((void)legendre_symbol(1, 9), Error);
    for (std::uint64_t p : {3ull, 5ull, 13ull, 29ull, 53ull, 173ull})
    {
        CHECK(legendre_symbol(1, p) == 1);
        for (std::int64_t i = -60; i < 200; ++i) REQUIRE(legendre_symbol(i, p) == oracle::euler_criterion(i, p));
    }
}

TEST_CASE("eligible_primes")
{
    CHECK(eligible_primes(60) == std::vector<std::uint64_t>{5, 13, 29, 53});
    CHECK(eligible_primes(500) == std::vector<std::uint64_t>{5, 13, 29, 53, 173, 229, 293});
    CHECK(eligible_primes(4).empty());
    CHECK_FALSE(is_eligible_prime(17));  // 17 - 4 = 13 is not a square
    CHECK_FALSE(is_eligible_prime(12));

    // brute-force filter: prime p with p - 4 an odd square
    std::vector<std::uint64_t> brute;
    for (std::uint64_t p = 5; p <= 5000; ++p)
    {
        if (!oracle::trial_division_is_prime(p)) continue;
        for (std::uint64_t a = 1; a * a <= p; a += 2)
        {
            if (a * a + 4 == p) brute.push_back(p);
        }
    }
    CHECK(eligible_primes(5000) == brute);
    for (const auto p : brute)
    {
        CHECK(p % 8 == 5);
        CHECK(((p - 1) / 4) % 2 == 1);
    }
}

TEST_CASE("quartic_decomposition")
{
    const auto q5 = quartic_decomposition(5, 2);
    CHECK(q5.a == 1);
    CHECK(q5.a * q5.a + 4 * q5.b * q5.b == 5);
    CHECK(q5.k == 1);

    const auto q13 = quartic_decomposition(13, 2);
    CHECK(q13.a == -3);
    CHECK(std::abs(q13.b) == 1);

    const auto q29 = quartic_decomposition(29, 2);
    CHECK(std::abs(q29.a) == 5);
    CHECK(std::abs(q29.b) == 1);

    CHECK_THROWS_AS((void)quartic_decomposition(17, 3), IneligiblePrime);
    CHECK_THROWS_AS((void)quartic_decomposition(13, 3), NotPrimitiveRoot);

    for (const auto p : eligible_primes(500))
    {
        for (const auto g : all_primitive_roots(p))
        {
            const auto q = quartic_decomposition(p, g);
            REQUIRE(std::int64_t(p) == q.a * q.a + 4 * q.b * q.b);
            REQUIRE(((q.a % 4) + 4) % 4 == 1);
            REQUIRE((q.b == 1 || q.b == -1));
            REQUIRE(q == quartic_decomposition(p, g));
        }
    }
}

TEST_CASE("quartic b flips between g and g^3")
{
    // chi(g^3) = chi(g)^3 = conj(chi(g)), which conjugates the Jacobi sum.
    const auto q2 = quartic_decomposition(13, 2);
    const auto q8 = quartic_decomposition(13, 7);  // 2^11 mod 13 = 7, and 11 = 3 (mod 4)
    CHECK(q2.b == -q8.b);
}

TEST_CASE("cyclotomic classes")
{
    const auto c5 = cyclotomic_classes(5, 2);
    CHECK(c5[0] == std::vector<std::uint64_t>{1});
    CHECK(c5[1] == std::vector<std::uint64_t>{2});
    CHECK(c5[2] == std::vector<std::uint64_t>{4});
    CHECK(c5[3] == std::vector<std::uint64_t>{3});

    const auto c13 = cyclotomic_classes(13, 2);
    CHECK(c13[0] == std::vector<std::uint64_t>{1, 3, 9});
    CHECK(c13[1] == std::vector<std::uint64_t>{2, 5, 6});
    CHECK(c13[2] == std::vector<std::uint64_t>{4, 10, 12});
    CHECK(c13[3] == std::vector<std::uint64_t>{7, 8, 11});
    CHECK(c13.class_of(0) == -1);
    CHECK(c13.class_of(13 + 5) == 1);

    CHECK_THROWS_AS(CyclotomicClasses(7, 3), IneligiblePrime);
    CHECK_THROWS_AS(CyclotomicClasses(13, 4), NotPrimitiveRoot);

    for (const auto p : eligible_primes(300))
    {
        for (const auto g : all_primitive_roots(p))
        {
            const CyclotomicClasses c(p, g);
            std::set<std::uint64_t> all;
            for (std::size_t j = 0; j < 4; ++j)
            {
                REQUIRE(c[j].size() == (p - 1) / 4);
                all.insert(c[j].begin(), c[j].end());
                // D_j = g^j D_0
                std::vector<std::uint64_t> coset;
                for (const auto x : c[0]) coset.push_back(x * pow_mod(g, j, p) % p);
                std::sort(coset.begin(), coset.end());
                REQUIRE(coset == c[j]);
            }
            REQUIRE(all.size() == p - 1);
            REQUIRE(*all.begin() == 1);
            REQUIRE(*all.rbegin() == p - 1);
            for (std::uint64_t i = 1; i < p; ++i)
            {
                REQUIRE(c.in_even_classes(i) == (legendre_symbol(std::int64_t(i), p) == 1));
            }
        }
    }
}

#pragma once

// Independent reference implementations used only by the tests. Nothing in
// here calls into the library's arithmetic paths.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "twoadic/bigint.hpp"

namespace oracle {

using cpp_int = boost::multiprecision::cpp_int;

inline cpp_int to_cpp(const twoadic::BigUint & x)
{
    cpp_int r = 0;
    const auto limbs = x.limbs();
    for (std::size_t i = limbs.size(); i-- > 0;)
    {
        r <<= 64;
        r += limbs[i];
    }
    return r;
}

inline twoadic::BigUint from_cpp(cpp_int x)
{
    std::vector<std::uint64_t> limbs;
    while (x > 0)
    {
        limbs.push_back(static_cast<std::uint64_t>(x & 0xFFFFFFFFFFFFFFFFull));
        x >>= 64;
    }
    return twoadic::BigUint::from_limbs(std::move(limbs));
}

inline cpp_int mersenne(unsigned n)
{
    return (cpp_int(1) << n) - 1;
}

inline cpp_int mod_floor(const cpp_int & x, const cpp_int & m)
{
    cpp_int r = x % m;
    if (r < 0) r += m;
    return r;
}

inline cpp_int random_bits(std::mt19937_64 & rng, unsigned bits)
{
    cpp_int r = 0;
    for (unsigned i = 0; i < bits; i += 64)
    {
        r <<= 64;
        r += rng();
    }
    const unsigned keep = std::uniform_int_distribution<unsigned>(0, bits)(rng);
    return r & ((cpp_int(1) << keep) - 1);
}

inline bool trial_division_is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t q = 2; q * q <= n; ++q)
    {
        if (n % q == 0) return false;
    }
    return true;
}

inline std::uint64_t brute_order(std::uint64_t g, std::uint64_t p)
{
    std::uint64_t x = g % p, k = 1;
    if (x == 0) return 0;
    while (x != 1)
    {
        x = x * g % p;
        ++k;
    }
    return k;
}

inline int euler_criterion(std::int64_t i, std::uint64_t p)
{
    std::uint64_t r = std::uint64_t(((i % std::int64_t(p)) + std::int64_t(p)) % std::int64_t(p));
    if (r == 0) return 0;
    std::uint64_t acc = 1;
    for (std::uint64_t e = 0; e < (p - 1) / 2; ++e) acc = acc * r % p;
    return acc == 1 ? 1 : -1;
}

inline std::uint64_t euler_phi(std::uint64_t n)
{
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
    {
        std::uint64_t a = k, b = n;
        while (b != 0) { const auto t = a % b; a = b; b = t; }
        if (a == 1) ++count;
    }
    return count;
}

inline std::vector<int> naive_autocorrelation(const std::vector<std::uint8_t> & s)
{
    const std::size_t n = s.size();
    std::vector<int> ac(n, 0);
    for (std::size_t tau = 0; tau < n; ++tau)
    {
        for (std::size_t t = 0; t < n; ++t) ac[tau] += (s[t] == s[(t + tau) % n]) ? 1 : -1;
    }
    return ac;
}

// GF(2)[x] polynomials as coefficient vectors, lowest degree first, trimmed.
using gf2poly = std::vector<std::uint8_t>;

inline void trim(gf2poly & a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline gf2poly gf2_mod(gf2poly a, const gf2poly & b)
{
    trim(a);
    while (a.size() >= b.size())
    {
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] ^= b[i];
        trim(a);
    }
    return a;
}

inline gf2poly gf2_gcd(gf2poly a, gf2poly b)
{
    trim(a);
    trim(b);
    while (!b.empty())
    {
        gf2poly r = gf2_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// LC = N - deg gcd(x^N - 1, S(x)) over GF(2).
inline std::size_t lc_by_gcd(const std::vector<std::uint8_t> & s)
{
    const std::size_t n = s.size();
    gf2poly xn1(n + 1, 0);
    xn1[0] = 1;
    xn1[n] = 1;
    gf2poly sx(s.begin(), s.end());
    trim(sx);
    if (sx.empty()) return 0;
    const gf2poly g = gf2_gcd(xn1, sx);
    return n - (g.size() - 1);
}

inline std::vector<std::uint8_t> random_bit_vector(std::mt19937_64 & rng, std::size_t n)
{
    std::vector<std::uint8_t> v(n);
    for (auto & b : v) b = std::uint8_t(rng() & 1);
    return v;
}

}  // namespace oracle

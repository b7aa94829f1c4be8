#include "twoadic/numtheory.hpp"

#include <algorithm>
#include <string>

#include "twoadic/error.hpp"

namespace twoadic {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept
{
    return std::uint64_t((unsigned __int128)(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept
{
    if (m == 1) return 0;
    std::uint64_t r = 1, x = base % m;
    for (; exp != 0; exp >>= 1)
    {
        if (exp & 1) r = mul_mod(r, x, m);
        x = mul_mod(x, x, m);
    }
    return r;
}

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2) return false;
    static constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (const std::uint64_t q : small)
    {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    // The first twelve primes are a complete witness set below 3.3 * 10^24.
    for (const std::uint64_t a : small)
    {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i)
        {
            x = mul_mod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> f;
    for (std::uint64_t q = 2; q * q <= n; q += (q == 2) ? 1 : 2)
    {
        if (n % q == 0)
        {
            f.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) f.push_back(n);
    return f;
}

namespace {

void require_prime(std::uint64_t p)
{
    if (!is_prime(p)) throw IneligiblePrime(std::to_string(p) + " is not prime");
}

bool is_generator(std::uint64_t g, std::uint64_t p, const std::vector<std::uint64_t> & factors)
{
    if (g % p == 0) return false;
    for (const std::uint64_t q : factors)
    {
        if (pow_mod(g, (p - 1) / q, p) == 1) return false;
    }
    return true;
}

}  // namespace

bool is_primitive_root(std::uint64_t g, std::uint64_t p)
{
    if (!is_prime(p)) return false;
    if (p == 2) return g % 2 == 1;
    return is_generator(g, p, prime_factors(p - 1));
}

std::uint64_t smallest_primitive_root(std::uint64_t p)
{
    require_prime(p);
    if (p == 2) return 1;
    const auto factors = prime_factors(p - 1);
    for (std::uint64_t g = 2;; ++g)
    {
        if (is_generator(g, p, factors)) return g;
    }
}

std::vector<std::uint64_t> all_primitive_roots(std::uint64_t p)
{
    require_prime(p);
    if (p == 2) return {1};
    const auto factors = prime_factors(p - 1);
    std::vector<std::uint64_t> roots;
    for (std::uint64_t g = 2; g < p; ++g)
    {
        if (is_generator(g, p, factors)) roots.push_back(g);
    }
    return roots;
}

int legendre_symbol(std::int64_t i, std::uint64_t p)
{
    if (p % 2 == 0 || !is_prime(p)) throw Error("legendre_symbol: modulus must be an odd prime");
    const std::int64_t sp = std::int64_t(p);
    const std::uint64_t r = std::uint64_t(((i % sp) + sp) % sp);
    if (r == 0) return 0;
    return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

bool is_eligible_prime(std::uint64_t p) noexcept
{
    if (p < 5 || p % 8 != 5) return false;
    const std::uint64_t t = p - 4;
    std::uint64_t a = 1;
    while (a * a < t) a += 2;
    return a * a == t && is_prime(p);
}

std::vector<std::uint64_t> eligible_primes(std::uint64_t limit)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t a = 1; a * a + 4 <= limit; a += 2)
    {
        if (is_prime(a * a + 4)) out.push_back(a * a + 4);
    }
    return out;
}

QuarticParams quartic_decomposition(std::uint64_t p, std::uint64_t g)
{
    if (!is_eligible_prime(p)) throw IneligiblePrime(std::to_string(p) + " is not a prime of the form a^2 + 4");
    if (!is_primitive_root(g, p)) throw NotPrimitiveRoot(std::to_string(g) + " is not a primitive root of " + std::to_string(p));

    // Discrete logarithms modulo 4 base g.
    std::vector<std::uint8_t> log4(p, 0);
    std::uint64_t x = 1;
    for (std::uint64_t m = 0; m < p - 1; ++m)
    {
        log4[x] = std::uint8_t(m % 4);
        x = mul_mod(x, g, p);
    }

    // chi(t) chi(1 - t) = i^(log t + log(1 - t)); accumulate the real and imaginary parts.
    static constexpr int re[4] = {1, 0, -1, 0};
    static constexpr int im[4] = {0, 1, 0, -1};
    std::int64_t jr = 0, ji = 0;
    for (std::uint64_t t = 2; t < p; ++t)
    {
        const int e = (log4[t] + log4[p + 1 - t]) % 4;
        jr += re[e];
        ji += im[e];
    }

    if (ji % 2 != 0 || jr * jr + ji * ji != std::int64_t(p))
        throw std::logic_error("quartic Jacobi sum has unexpected shape for p = " + std::to_string(p));

    if (((jr % 4) + 4) % 4 != 1)
    {
        jr = -jr;
        ji = -ji;
    }

    QuarticParams q;
    q.p = p;
    q.k = (p - 1) / 4;
    q.a = jr;
    q.b = int(ji / 2);
    q.g = g;
    return q;
}

CyclotomicClasses::CyclotomicClasses(std::uint64_t p, std::uint64_t g) : p_(p), g_(g)
{
    if (!is_prime(p) || p % 4 != 1) throw IneligiblePrime(std::to_string(p) + " is not a prime congruent to 1 mod 4");
    if (!is_primitive_root(g, p)) throw NotPrimitiveRoot(std::to_string(g) + " is not a primitive root of " + std::to_string(p));

    index_.assign(p, -1);
    std::uint64_t x = 1;
    for (std::uint64_t m = 0; m < p - 1; ++m)
    {
        classes_[m % 4].push_back(x);
        index_[x] = std::int8_t(m % 4);
        x = mul_mod(x, g, p);
    }
    for (auto & c : classes_) std::sort(c.begin(), c.end());
}

int CyclotomicClasses::class_of(std::uint64_t x) const noexcept
{
    return index_[x % p_];
}

bool CyclotomicClasses::in_even_classes(std::uint64_t x) const noexcept
{
    const int j = class_of(x);
    return j == 0 || j == 2;
}

CyclotomicClasses cyclotomic_classes(std::uint64_t p, std::uint64_t g)
{
    return CyclotomicClasses(p, g);
}

}  // namespace twoadic

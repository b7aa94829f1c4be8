#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace twoadic {

/// Deterministic Miller-Rabin; exact for every 64-bit input.
[[nodiscard]] bool is_prime(std::uint64_t n) noexcept;

[[nodiscard]] std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
[[nodiscard]] std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

/// Distinct prime factors, ascending.
[[nodiscard]] std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// True iff g has multiplicative order p-1 mod prime p.
[[nodiscard]] bool is_primitive_root(std::uint64_t g, std::uint64_t p);

/// Throws IneligiblePrime if p is not prime.
[[nodiscard]] std::uint64_t smallest_primitive_root(std::uint64_t p);
/// Ascending list of all generators of Z_p^*; throws IneligiblePrime if p is not prime.
[[nodiscard]] std::vector<std::uint64_t> all_primitive_roots(std::uint64_t p);

/// Legendre symbol (i/p) via Euler's criterion. Throws Error unless p is an odd prime.
[[nodiscard]] int legendre_symbol(std::int64_t i, std::uint64_t p);

/// Primes p with p = a^2 + 4 for odd a (so p = 5 mod 8).
[[nodiscard]] bool is_eligible_prime(std::uint64_t p) noexcept;
/// All eligible primes <= limit, ascending.
[[nodiscard]] std::vector<std::uint64_t> eligible_primes(std::uint64_t limit);

/// p = 4k + 1 = a^2 + 4b^2 with a = 1 (mod 4), b = +-1, and primitive root g.
struct QuarticParams
{
    std::uint64_t p = 0;
    std::uint64_t k = 0;
    std::int64_t a = 0;
    int b = 0;
    std::uint64_t g = 0;

    friend bool operator==(const QuarticParams &, const QuarticParams &) = default;
};

/// Resolves (a, b) for (p, g).
///
/// The sign of b comes from the quartic Jacobi sum J = sum_{t=2}^{p-1} chi(t) chi(1-t)
/// with chi(g) = i. Writing J = a' + 2b'i and negating both parts when a' = 3 (mod 4)
/// gives a = 1 (mod 4) and b = b'.
///
/// Throws IneligiblePrime or NotPrimitiveRoot.
[[nodiscard]] QuarticParams quartic_decomposition(std::uint64_t p, std::uint64_t g);

/// Order-4 cyclotomic classes D_j = { g^(4i+j) mod p : 0 <= i < k }.
class CyclotomicClasses
{
public:
    /// Requires p = 1 (mod 4) prime and g primitive; throws otherwise.
    CyclotomicClasses(std::uint64_t p, std::uint64_t g);

    [[nodiscard]] std::uint64_t p() const noexcept { return p_; }
    [[nodiscard]] std::uint64_t g() const noexcept { return g_; }
    /// Sorted residues of D_j.
    [[nodiscard]] const std::vector<std::uint64_t> & operator[](std::size_t j) const { return classes_.at(j); }
    /// Index j of the class containing x mod p, or -1 when p | x.
    [[nodiscard]] int class_of(std::uint64_t x) const noexcept;
    /// x mod p lies in D_0 u D_2 (a nonzero quadratic residue).
    [[nodiscard]] bool in_even_classes(std::uint64_t x) const noexcept;

private:
    std::uint64_t p_;
    std::uint64_t g_;
    std::array<std::vector<std::uint64_t>, 4> classes_;
    std::vector<std::int8_t> index_;  // residue -> class, -1 for 0
};

[[nodiscard]] CyclotomicClasses cyclotomic_classes(std::uint64_t p, std::uint64_t g);

}  // namespace twoadic

#pragma once

#include <cstddef>

#include "twoadic/bigint.hpp"
#include "twoadic/sequence.hpp"

namespace twoadic {

/// Element of Z / (2^N - 1) Z in canonical form 0 <= value < 2^N - 1.
///
/// Since 2^N = 1 in this ring, reduction sums N-bit chunks instead of
/// dividing, and multiplication by 2^k is a cyclic rotation of N bits.
class MersenneResidue
{
public:
    /// Zero residue; throws Error if exponent == 0.
    explicit MersenneResidue(std::size_t exponent);

    /// x mod 2^N - 1 by limb folding.
    static MersenneResidue reduce(const BigUint & x, std::size_t exponent);
    /// 2^(k mod N)
    static MersenneResidue power_of_two(std::size_t k, std::size_t exponent);

    [[nodiscard]] std::size_t exponent() const noexcept { return n_; }
    [[nodiscard]] const BigUint & value() const noexcept { return value_; }
    [[nodiscard]] BigUint modulus() const { return BigUint::mersenne(n_); }
    [[nodiscard]] bool is_zero() const noexcept { return value_.is_zero(); }

    [[nodiscard]] MersenneResidue negated() const;
    /// this * 2^k
    [[nodiscard]] MersenneResidue rotated(std::size_t k) const;

    /// Throw Error when exponents differ.
    friend MersenneResidue operator+(const MersenneResidue & x, const MersenneResidue & y);
    friend MersenneResidue operator-(const MersenneResidue & x, const MersenneResidue & y);
    friend MersenneResidue operator*(const MersenneResidue & x, const MersenneResidue & y);

    friend bool operator==(const MersenneResidue &, const MersenneResidue &) = default;

private:
    std::size_t n_;
    BigUint value_;

    MersenneResidue(std::size_t exponent, BigUint canonical) : n_(exponent), value_(std::move(canonical)) {}
};

[[nodiscard]] inline MersenneResidue reduce(const BigUint & x, std::size_t exponent)
{
    return MersenneResidue::reduce(x, exponent);
}
[[nodiscard]] MersenneResidue mul(const MersenneResidue & x, const MersenneResidue & y);
[[nodiscard]] MersenneResidue add_signed(const MersenneResidue & x, const SignedBig & t);
/// gcd(value, 2^N - 1); equals 2^N - 1 for the zero residue.
[[nodiscard]] BigUint gcd_with_modulus(const MersenneResidue & x);

/// S(2) = sum s(i) 2^i mod 2^N - 1.
[[nodiscard]] MersenneResidue eval_S(const BinarySequence & s);
/// T(1/2) = sum (-1)^s(i) 2^((N - i) mod N) mod 2^N - 1.
[[nodiscard]] MersenneResidue eval_T_inv(const BinarySequence & s);

}  // namespace twoadic

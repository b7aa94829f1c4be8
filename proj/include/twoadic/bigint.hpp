#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twoadic {

/// Arbitrary-precision non-negative integer stored as little-endian 64-bit limbs.
///
/// The limb vector is always normalized: no high zero limbs, and zero is the
/// empty vector. Sizes in this project stay in the low thousands of bits, so
/// schoolbook multiplication and Knuth division are used throughout.
class BigUint
{
public:
    using limb_type = std::uint64_t;
    static constexpr std::size_t limb_bits = 64;

    BigUint() = default;
    BigUint(std::uint64_t value);  // NOLINT(google-explicit-constructor): numeric literal convenience

    static BigUint from_limbs(std::vector<limb_type> limbs);
    static BigUint from_decimal(std::string_view digits);
    /// 2^exponent
    static BigUint power_of_two(std::size_t exponent);
    /// 2^exponent - 1
    static BigUint mersenne(std::size_t exponent);

    [[nodiscard]] bool is_zero() const noexcept { return limbs_.empty(); }
    [[nodiscard]] std::size_t bit_length() const noexcept;
    [[nodiscard]] bool bit(std::size_t index) const noexcept;
    [[nodiscard]] std::size_t popcount() const noexcept;
    [[nodiscard]] std::span<const limb_type> limbs() const noexcept { return limbs_; }
    [[nodiscard]] std::size_t trailing_zeros() const noexcept;

    /// Value truncated to 64 bits.
    [[nodiscard]] std::uint64_t low_u64() const noexcept { return limbs_.empty() ? 0 : limbs_[0]; }
    [[nodiscard]] bool fits_u64() const noexcept { return limbs_.size() <= 1; }

    void set_bit(std::size_t index);

    BigUint & operator+=(const BigUint & rhs);
    /// Requires *this >= rhs; throws std::domain_error otherwise.
    BigUint & operator-=(const BigUint & rhs);
    BigUint & operator*=(const BigUint & rhs);
    BigUint & operator<<=(std::size_t shift);
    BigUint & operator>>=(std::size_t shift);

    friend BigUint operator+(BigUint lhs, const BigUint & rhs) { return lhs += rhs; }
    friend BigUint operator-(BigUint lhs, const BigUint & rhs) { return lhs -= rhs; }
    friend BigUint operator*(const BigUint & lhs, const BigUint & rhs);
    friend BigUint operator<<(BigUint lhs, std::size_t shift) { return lhs <<= shift; }
    friend BigUint operator>>(BigUint lhs, std::size_t shift) { return lhs >>= shift; }
    friend BigUint operator/(const BigUint & lhs, const BigUint & rhs) { return divmod(lhs, rhs).first; }
    friend BigUint operator%(const BigUint & lhs, const BigUint & rhs) { return divmod(lhs, rhs).second; }

    friend bool operator==(const BigUint &, const BigUint &) = default;
    friend std::strong_ordering operator<=>(const BigUint & lhs, const BigUint & rhs) noexcept;

    /// Quotient and remainder. Throws std::domain_error on division by zero.
    static std::pair<BigUint, BigUint> divmod(const BigUint & dividend, const BigUint & divisor);
    /// Remainder by a single word, without allocating.
    [[nodiscard]] std::uint64_t mod_u64(std::uint64_t divisor) const;

    [[nodiscard]] std::string to_decimal() const;

private:
    std::vector<limb_type> limbs_;

    void normalize() noexcept;
};

/// Binary (Stein) gcd; gcd(0, m) = m.
BigUint gcd(BigUint a, BigUint b);

/// Signed integer as sign and magnitude, used for congruence terms like -p.
struct SignedBig
{
    bool negative = false;
    BigUint magnitude;

    SignedBig() = default;
    SignedBig(std::int64_t value);  // NOLINT(google-explicit-constructor)
    SignedBig(bool is_negative, BigUint mag) : negative(is_negative && !mag.is_zero()), magnitude(std::move(mag)) {}
};

}  // namespace twoadic

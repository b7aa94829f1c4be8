#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twoadic/numtheory.hpp"

namespace twoadic {

/// One period of a binary sequence, packed 64 bits per word.
///
/// Indexing through at() is cyclic. Bits past size() in the last word are
/// always zero so word-level kernels can popcount without masking.
class BinarySequence
{
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    /// All-zero sequence of period n (n >= 1).
    explicit BinarySequence(std::size_t n);
    /// From explicit 0/1 values; throws SequenceError on empty input or values other than 0/1.
    static BinarySequence from_bits(std::span<const std::uint8_t> bits);
    /// Parses "[N=<int>;]<0|1>*" with optional trailing newline.
    static BinarySequence parse(std::string_view literal);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] bool operator[](std::size_t i) const noexcept { return (words_[i / word_bits] >> (i % word_bits)) & 1; }
    [[nodiscard]] bool at(std::size_t i) const noexcept { return (*this)[i % n_]; }
    void set(std::size_t i, bool value) noexcept;
    void flip(std::size_t i) noexcept { set(i, !(*this)[i]); }

    [[nodiscard]] std::size_t weight() const noexcept;
    [[nodiscard]] std::span<const word_type> words() const noexcept { return words_; }
    [[nodiscard]] std::vector<std::uint8_t> to_bits() const;
    /// '0'/'1' characters only.
    [[nodiscard]] std::string to_string() const;
    /// Fixture literal "N=<n>;<bits>".
    [[nodiscard]] std::string to_literal() const;

    friend bool operator==(const BinarySequence &, const BinarySequence &) = default;

private:
    std::size_t n_;
    std::vector<word_type> words_;
};

/// output(i) = s((i + d) mod N)
[[nodiscard]] BinarySequence left_shift(const BinarySequence & s, std::size_t d);
/// output(i) = s(i) xor c
[[nodiscard]] BinarySequence add_constant(const BinarySequence & s, bool c);
/// output(4t + j) = columns[j](t). Throws SequenceError on mismatched periods.
[[nodiscard]] BinarySequence interleave(const std::array<BinarySequence, 4> & columns);
/// Inverse of interleave; throws SequenceError unless 4 | N.
[[nodiscard]] std::array<BinarySequence, 4> deinterleave(const BinarySequence & s);
/// Smallest positive period dividing N.
[[nodiscard]] std::size_t least_period(const BinarySequence & s);

/// Ding-Helleseth-Lam sequence of period p.
/// kind 1..4 selects support D0uD1, D0uD3, D1uD2, D2uD3; throws Error otherwise.
[[nodiscard]] BinarySequence dhl_sequence(const CyclotomicClasses & classes, int kind);
[[nodiscard]] BinarySequence dhl_sequence(std::uint64_t p, std::uint64_t g, int kind);

using WVector = std::array<std::uint8_t, 4>;

/// The four w with w0 = w2 and w1 = w3, in (w0, w1) lexicographic order.
inline constexpr std::array<WVector, 4> admissible_w = {{{0, 0, 0, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}, {1, 1, 1, 1}}};

[[nodiscard]] constexpr bool is_admissible(const WVector & w) noexcept
{
    return w[0] <= 1 && w[1] <= 1 && w[0] == w[2] && w[1] == w[3];
}
/// "0101" <-> {0,1,0,1}; parse throws Error on malformed input.
[[nodiscard]] WVector parse_w(std::string_view text);
[[nodiscard]] std::string format_w(const WVector & w);

struct ConstructionParams
{
    QuarticParams quartic;
    std::uint64_t d = 0;  // (3p + 1) / 4
    WVector w{};

    [[nodiscard]] std::uint64_t p() const noexcept { return quartic.p; }
    [[nodiscard]] std::uint64_t g() const noexcept { return quartic.g; }
    [[nodiscard]] int b() const noexcept { return quartic.b; }
    [[nodiscard]] ConstructionParams with_b(int b) const
    {
        ConstructionParams c = *this;
        c.quartic.b = b;
        return c;
    }
};

/// Validates (p, g, w) and resolves a, b and d. Throws IneligiblePrime,
/// NotPrimitiveRoot, or Error for an inadmissible w.
[[nodiscard]] ConstructionParams make_construction(std::uint64_t p, std::uint64_t g, const WVector & w);

/// I( s3 + w0, L^d(s2) + w1, L^2d(s1) + w2, L^3d(s1) + w3 ), period 4p.
[[nodiscard]] BinarySequence su_sequence(const ConstructionParams & params);

/// interleave( L^shifts[j](s^kinds[j]) + w[j] ).
/// Rejects w with w0 != w2 or w1 != w3 unless allow_any_w.
[[nodiscard]] BinarySequence generalized_interleaved(std::uint64_t p, std::uint64_t g, const std::array<int, 4> & kinds,
                                                     const std::array<std::uint64_t, 4> & shifts, const WVector & w,
                                                     bool allow_any_w = false);

}  // namespace twoadic

#include "twoadic/sequence.hpp"

#include <bit>
#include <charconv>

#include "twoadic/error.hpp"

namespace twoadic {

BinarySequence::BinarySequence(std::size_t n) : n_(n), words_((n + word_bits - 1) / word_bits, 0)
{
    if (n == 0) throw SequenceError("sequence period must be positive");
}

BinarySequence BinarySequence::from_bits(std::span<const std::uint8_t> bits)
{
    BinarySequence s(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
    {
        if (bits[i] > 1) throw SequenceError("sequence values must be 0 or 1");
        s.set(i, bits[i] != 0);
    }
    return s;
}

BinarySequence BinarySequence::parse(std::string_view literal)
{
    while (!literal.empty() && (literal.back() == '\n' || literal.back() == '\r')) literal.remove_suffix(1);

    std::size_t declared = 0;
    bool has_declared = false;
    if (literal.starts_with("N="))
    {
        const auto semi = literal.find(';');
        if (semi == std::string_view::npos) throw SequenceError("sequence literal: missing ';' after N=<int>");
        const std::string_view num = literal.substr(2, semi - 2);
        const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), declared);
        if (ec != std::errc() || ptr != num.data() + num.size()) throw SequenceError("sequence literal: bad N value");
        has_declared = true;
        literal.remove_prefix(semi + 1);
    }

    if (literal.empty()) throw SequenceError("sequence literal: no bits");
    BinarySequence s(literal.size());
    for (std::size_t i = 0; i < literal.size(); ++i)
    {
        const char c = literal[i];
        if (c != '0' && c != '1') throw SequenceError("sequence literal: unexpected character");
        s.set(i, c == '1');
    }
    if (has_declared && declared != s.size()) throw SequenceError("sequence literal: N does not match bit count");
    return s;
}

void BinarySequence::set(std::size_t i, bool value) noexcept
{
    const word_type mask = word_type(1) << (i % word_bits);
    if (value) words_[i / word_bits] |= mask;
    else words_[i / word_bits] &= ~mask;
}

std::size_t BinarySequence::weight() const noexcept
{
    std::size_t w = 0;
    for (const word_type x : words_) w += std::size_t(std::popcount(x));
    return w;
}

std::vector<std::uint8_t> BinarySequence::to_bits() const
{
    std::vector<std::uint8_t> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = (*this)[i] ? 1 : 0;
    return out;
}

std::string BinarySequence::to_string() const
{
    std::string out(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
    {
        if ((*this)[i]) out[i] = '1';
    }
    return out;
}

std::string BinarySequence::to_literal() const
{
    return "N=" + std::to_string(n_) + ";" + to_string();
}

BinarySequence left_shift(const BinarySequence & s, std::size_t d)
{
    const std::size_t n = s.size();
    d %= n;
    BinarySequence out(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        std::size_t j = i + d;
        if (j >= n) j -= n;
        out.set(i, s[j]);
    }
    return out;
}

BinarySequence add_constant(const BinarySequence & s, bool c)
{
    if (!c) return s;
    BinarySequence out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out.set(i, !s[i]);
    return out;
}

BinarySequence interleave(const std::array<BinarySequence, 4> & columns)
{
    const std::size_t v = columns[0].size();
    for (const auto & c : columns)
    {
        if (c.size() != v) throw SequenceError("interleave: columns have different periods");
    }
    BinarySequence out(4 * v);
    for (std::size_t t = 0; t < v; ++t)
    {
        for (std::size_t j = 0; j < 4; ++j) out.set(4 * t + j, columns[j][t]);
    }
    return out;
}

std::array<BinarySequence, 4> deinterleave(const BinarySequence & s)
{
    if (s.size() % 4 != 0) throw SequenceError("deinterleave: period is not a multiple of 4");
    const std::size_t v = s.size() / 4;
    std::array<BinarySequence, 4> cols{BinarySequence(v), BinarySequence(v), BinarySequence(v), BinarySequence(v)};
    for (std::size_t t = 0; t < v; ++t)
    {
        for (std::size_t j = 0; j < 4; ++j) cols[j].set(t, s[4 * t + j]);
    }
    return cols;
}

std::size_t least_period(const BinarySequence & s)
{
    const std::size_t n = s.size();
    for (std::size_t q = 1; q < n; ++q)
    {
        if (n % q != 0) continue;
        if (left_shift(s, q) == s) return q;
    }
    return n;
}

BinarySequence dhl_sequence(const CyclotomicClasses & classes, int kind)
{
    int first = 0, second = 0;
    switch (kind)
    {
        case 1: first = 0; second = 1; break;
        case 2: first = 0; second = 3; break;
        case 3: first = 1; second = 2; break;
        case 4: first = 2; second = 3; break;
        default: throw Error("dhl_sequence: kind must be 1, 2, 3 or 4");
    }
    BinarySequence s(classes.p());
    for (const std::uint64_t x : classes[std::size_t(first)]) s.set(x, true);
    for (const std::uint64_t x : classes[std::size_t(second)]) s.set(x, true);
    return s;
}

BinarySequence dhl_sequence(std::uint64_t p, std::uint64_t g, int kind)
{
    return dhl_sequence(CyclotomicClasses(p, g), kind);
}

WVector parse_w(std::string_view text)
{
    if (text.size() != 4) throw Error("w must be four characters of 0/1");
    WVector w{};
    for (std::size_t j = 0; j < 4; ++j)
    {
        if (text[j] != '0' && text[j] != '1') throw Error("w must be four characters of 0/1");
        w[j] = std::uint8_t(text[j] - '0');
    }
    return w;
}

std::string format_w(const WVector & w)
{
    std::string s(4, '0');
    for (std::size_t j = 0; j < 4; ++j) s[j] = char('0' + w[j]);
    return s;
}

ConstructionParams make_construction(std::uint64_t p, std::uint64_t g, const WVector & w)
{
    if (!is_admissible(w)) throw Error("w = " + format_w(w) + " violates w0 = w2, w1 = w3");
    ConstructionParams c;
    c.quartic = quartic_decomposition(p, g);
    c.d = (3 * p + 1) / 4;
    c.w = w;
    return c;
}

namespace {

BinarySequence build(const CyclotomicClasses & classes, const std::array<int, 4> & kinds,
                     const std::array<std::uint64_t, 4> & shifts, const WVector & w)
{
    std::array<BinarySequence, 4> cols{BinarySequence(1), BinarySequence(1), BinarySequence(1), BinarySequence(1)};
    for (std::size_t j = 0; j < 4; ++j)
    {
        cols[j] = add_constant(left_shift(dhl_sequence(classes, kinds[j]), std::size_t(shifts[j] % classes.p())), w[j] != 0);
    }
    return interleave(cols);
}

}  // namespace

BinarySequence su_sequence(const ConstructionParams & params)
{
    const std::uint64_t d = params.d;
    const CyclotomicClasses classes(params.p(), params.g());
    return build(classes, {3, 2, 1, 1}, {0, d, 2 * d, 3 * d}, params.w);
}

BinarySequence generalized_interleaved(std::uint64_t p, std::uint64_t g, const std::array<int, 4> & kinds,
                                       const std::array<std::uint64_t, 4> & shifts, const WVector & w, bool allow_any_w)
{
    for (const auto bit : w)
    {
        if (bit > 1) throw Error("w entries must be bits");
    }
    if (!allow_any_w && !is_admissible(w)) throw Error("w = " + format_w(w) + " violates w0 = w2, w1 = w3");
    for (const int k : kinds)
    {
        if (k < 1 || k > 4) throw Error("generalized_interleaved: kinds must be in 1..4");
    }
    if (!is_eligible_prime(p)) throw IneligiblePrime(std::to_string(p) + " is not a prime of the form a^2 + 4");
    return build(CyclotomicClasses(p, g), kinds, shifts, w);
}

}  // namespace twoadic

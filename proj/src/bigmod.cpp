#include "twoadic/bigmod.hpp"

#include <span>
#include <vector>

#include "twoadic/error.hpp"

namespace twoadic {

namespace {

using limb = BigUint::limb_type;
constexpr std::size_t limb_bits = BigUint::limb_bits;

// Bits [start, start + len) of a limb array, as limbs.
std::vector<limb> extract_bits(std::span<const limb> src, std::size_t start, std::size_t len)
{
    std::vector<limb> out((len + limb_bits - 1) / limb_bits, 0);
    const std::size_t w0 = start / limb_bits, sh = start % limb_bits;
    for (std::size_t i = 0; i < out.size(); ++i)
    {
        const std::size_t w = w0 + i;
        limb v = (w < src.size()) ? src[w] >> sh : 0;
        if (sh != 0 && w + 1 < src.size()) v |= src[w + 1] << (limb_bits - sh);
        out[i] = v;
    }
    const std::size_t top = len % limb_bits;
    if (top != 0 && !out.empty()) out.back() &= (limb(1) << top) - 1;
    return out;
}

BigUint fold(const BigUint & x, std::size_t n)
{
    BigUint acc = x;
    while (acc.bit_length() > n)
    {
        const auto limbs = acc.limbs();
        const std::size_t bl = acc.bit_length();
        BigUint sum;
        for (std::size_t start = 0; start < bl; start += n) sum += BigUint::from_limbs(extract_bits(limbs, start, n));
        acc = std::move(sum);
    }
    // acc < 2^n; the modulus itself is the only non-canonical value left.
    if (acc.bit_length() == n && acc.popcount() == n) return BigUint();
    return acc;
}

void require_same(const MersenneResidue & x, const MersenneResidue & y)
{
    if (x.exponent() != y.exponent()) throw Error("residues belong to different moduli 2^N - 1");
}

}  // namespace

MersenneResidue::MersenneResidue(std::size_t exponent) : n_(exponent)
{
    if (exponent == 0) throw Error("modulus exponent N must be positive");
}

MersenneResidue MersenneResidue::reduce(const BigUint & x, std::size_t exponent)
{
    if (exponent == 0) throw Error("modulus exponent N must be positive");
    return MersenneResidue(exponent, fold(x, exponent));
}

MersenneResidue MersenneResidue::power_of_two(std::size_t k, std::size_t exponent)
{
    return reduce(BigUint::power_of_two(k % exponent), exponent);
}

MersenneResidue MersenneResidue::negated() const
{
    if (value_.is_zero()) return *this;
    return MersenneResidue(n_, modulus() - value_);
}

MersenneResidue MersenneResidue::rotated(std::size_t k) const
{
    k %= n_;
    if (k == 0 || value_.is_zero()) return *this;
    return reduce(value_ << k, n_);
}

MersenneResidue operator+(const MersenneResidue & x, const MersenneResidue & y)
{
    require_same(x, y);
    return MersenneResidue::reduce(x.value_ + y.value_, x.n_);
}

MersenneResidue operator-(const MersenneResidue & x, const MersenneResidue & y)
{
    return x + y.negated();
}

MersenneResidue operator*(const MersenneResidue & x, const MersenneResidue & y)
{
    require_same(x, y);
    return MersenneResidue::reduce(x.value_ * y.value_, x.n_);
}

MersenneResidue mul(const MersenneResidue & x, const MersenneResidue & y)
{
    return x * y;
}

MersenneResidue add_signed(const MersenneResidue & x, const SignedBig & t)
{
    const MersenneResidue r = reduce(t.magnitude, x.exponent());
    return t.negative ? x - r : x + r;
}

BigUint gcd_with_modulus(const MersenneResidue & x)
{
    return gcd(x.value(), x.modulus());
}

MersenneResidue eval_S(const BinarySequence & s)
{
    const auto words = s.words();
    return reduce(BigUint::from_limbs({words.begin(), words.end()}), s.size());
}

MersenneResidue eval_T_inv(const BinarySequence & s)
{
    // Terms with s(i) = 0 and with s(i) = 1 occupy disjoint bit positions.
    const std::size_t n = s.size();
    BigUint plus, minus;
    for (std::size_t i = 0; i < n; ++i)
    {
        const std::size_t e = (n - i) % n;
        if (s[i]) minus.set_bit(e);
        else plus.set_bit(e);
    }
    return reduce(plus, n) - reduce(minus, n);
}

}  // namespace twoadic

#include "twoadic/bigint.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace twoadic {

namespace {

using u128 = unsigned __int128;

// 10^19, the largest power of ten below 2^64.
constexpr std::uint64_t decimal_chunk = 10000000000000000000ull;
constexpr int decimal_chunk_digits = 19;

// In-place division by one word; returns the remainder.
std::uint64_t div_small(std::vector<std::uint64_t> & limbs, std::uint64_t divisor)
{
    u128 rem = 0;
    for (std::size_t i = limbs.size(); i-- > 0;)
    {
        const u128 cur = (rem << 64) | limbs[i];
        limbs[i] = std::uint64_t(cur / divisor);
        rem = cur % divisor;
    }
    while (!limbs.empty() && limbs.back() == 0) limbs.pop_back();
    return std::uint64_t(rem);
}

}  // namespace

BigUint::BigUint(std::uint64_t value)
{
    if (value != 0) limbs_.push_back(value);
}

BigUint BigUint::from_limbs(std::vector<limb_type> limbs)
{
    BigUint r;
    r.limbs_ = std::move(limbs);
    r.normalize();
    return r;
}

BigUint BigUint::from_decimal(std::string_view digits)
{
    if (digits.empty()) throw std::invalid_argument("empty decimal string");
    BigUint r;
    for (const char c : digits)
    {
        if (c < '0' || c > '9') throw std::invalid_argument("invalid decimal digit");
        r *= BigUint(10);
        r += BigUint(std::uint64_t(c - '0'));
    }
    return r;
}

BigUint BigUint::power_of_two(std::size_t exponent)
{
    BigUint r;
    r.set_bit(exponent);
    return r;
}

BigUint BigUint::mersenne(std::size_t exponent)
{
    BigUint r;
    if (exponent == 0) return r;
    r.limbs_.assign((exponent + limb_bits - 1) / limb_bits, ~limb_type(0));
    const std::size_t top = exponent % limb_bits;
    if (top != 0) r.limbs_.back() = (limb_type(1) << top) - 1;
    return r;
}

void BigUint::normalize() noexcept
{
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::size_t BigUint::bit_length() const noexcept
{
    if (limbs_.empty()) return 0;
    return (limbs_.size() - 1) * limb_bits + std::size_t(std::bit_width(limbs_.back()));
}

bool BigUint::bit(std::size_t index) const noexcept
{
    const std::size_t w = index / limb_bits;
    if (w >= limbs_.size()) return false;
    return ((limbs_[w] >> (index % limb_bits)) & 1) != 0;
}

std::size_t BigUint::popcount() const noexcept
{
    std::size_t n = 0;
    for (const limb_type l : limbs_) n += std::size_t(std::popcount(l));
    return n;
}

std::size_t BigUint::trailing_zeros() const noexcept
{
    for (std::size_t i = 0; i < limbs_.size(); ++i)
    {
        if (limbs_[i] != 0) return i * limb_bits + std::size_t(std::countr_zero(limbs_[i]));
    }
    return 0;
}

void BigUint::set_bit(std::size_t index)
{
    const std::size_t w = index / limb_bits;
    if (w >= limbs_.size()) limbs_.resize(w + 1, 0);
    limbs_[w] |= limb_type(1) << (index % limb_bits);
}

BigUint & BigUint::operator+=(const BigUint & rhs)
{
    if (rhs.limbs_.size() > limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    limb_type carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i)
    {
        const limb_type r = (i < rhs.limbs_.size()) ? rhs.limbs_[i] : 0;
        if (r == 0 && carry == 0 && i >= rhs.limbs_.size()) break;
        const u128 t = u128(limbs_[i]) + r + carry;
        limbs_[i] = limb_type(t);
        carry = limb_type(t >> 64);
    }
    if (carry != 0) limbs_.push_back(carry);
    return *this;
}

BigUint & BigUint::operator-=(const BigUint & rhs)
{
    if (*this < rhs) throw std::domain_error("BigUint subtraction underflow");
    limb_type borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i)
    {
        const limb_type r = (i < rhs.limbs_.size()) ? rhs.limbs_[i] : 0;
        if (r == 0 && borrow == 0 && i >= rhs.limbs_.size()) break;
        const limb_type a = limbs_[i];
        const limb_type t = a - r - borrow;
        borrow = (a < r || (a == r && borrow != 0)) ? 1 : 0;
        limbs_[i] = t;
    }
    normalize();
    return *this;
}

BigUint operator*(const BigUint & lhs, const BigUint & rhs)
{
    if (lhs.is_zero() || rhs.is_zero()) return BigUint();
    std::vector<std::uint64_t> out(lhs.limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < lhs.limbs_.size(); ++i)
    {
        std::uint64_t carry = 0;
        const u128 a = lhs.limbs_[i];
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j)
        {
            const u128 t = a * rhs.limbs_[j] + out[i + j] + carry;
            out[i + j] = std::uint64_t(t);
            carry = std::uint64_t(t >> 64);
        }
        out[i + rhs.limbs_.size()] = carry;
    }
    return BigUint::from_limbs(std::move(out));
}

BigUint & BigUint::operator*=(const BigUint & rhs)
{
    *this = *this * rhs;
    return *this;
}

BigUint & BigUint::operator<<=(std::size_t shift)
{
    if (limbs_.empty() || shift == 0) return *this;
    const std::size_t words = shift / limb_bits, bits = shift % limb_bits;
    std::vector<limb_type> out(limbs_.size() + words + 1, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i)
    {
        out[i + words] |= limbs_[i] << bits;
        if (bits != 0) out[i + words + 1] |= limbs_[i] >> (limb_bits - bits);
    }
    limbs_ = std::move(out);
    normalize();
    return *this;
}

BigUint & BigUint::operator>>=(std::size_t shift)
{
    const std::size_t words = shift / limb_bits, bits = shift % limb_bits;
    if (words >= limbs_.size())
    {
        limbs_.clear();
        return *this;
    }
    const std::size_t n = limbs_.size() - words;
    for (std::size_t i = 0; i < n; ++i)
    {
        limb_type v = limbs_[i + words] >> bits;
        if (bits != 0 && i + words + 1 < limbs_.size()) v |= limbs_[i + words + 1] << (limb_bits - bits);
        limbs_[i] = v;
    }
    limbs_.resize(n);
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const BigUint & lhs, const BigUint & rhs) noexcept
{
    if (lhs.limbs_.size() != rhs.limbs_.size()) return lhs.limbs_.size() <=> rhs.limbs_.size();
    for (std::size_t i = lhs.limbs_.size(); i-- > 0;)
    {
        if (lhs.limbs_[i] != rhs.limbs_[i]) return lhs.limbs_[i] <=> rhs.limbs_[i];
    }
    return std::strong_ordering::equal;
}

// Knuth, TAOCP vol. 2, 4.3.1 Algorithm D, with 64-bit digits.
std::pair<BigUint, BigUint> BigUint::divmod(const BigUint & dividend, const BigUint & divisor)
{
    if (divisor.is_zero()) throw std::domain_error("BigUint division by zero");
    if (dividend < divisor) return {BigUint(), dividend};
    if (divisor.limbs_.size() == 1)
    {
        std::vector<limb_type> q = dividend.limbs_;
        const std::uint64_t r = div_small(q, divisor.limbs_[0]);
        return {from_limbs(std::move(q)), BigUint(r)};
    }

    const int s = std::countl_zero(divisor.limbs_.back());
    const BigUint vn_big = divisor << std::size_t(s);
    const std::vector<limb_type> & vn = vn_big.limbs_;
    std::vector<limb_type> un = (dividend << std::size_t(s)).limbs_;
    un.resize(dividend.limbs_.size() + 1, 0);
    const std::size_t n = vn.size(), m = dividend.limbs_.size() - n;
    std::vector<limb_type> q(m + 1, 0);

    for (std::size_t j = m + 1; j-- > 0;)
    {
        const u128 num = (u128(un[j + n]) << 64) | un[j + n - 1];
        u128 qhat = num / vn[n - 1];
        u128 rhat = num % vn[n - 1];
        while (qhat > ~std::uint64_t(0) || qhat * vn[n - 2] > ((rhat << 64) | un[j + n - 2]))
        {
            --qhat;
            rhat += vn[n - 1];
            if (rhat > ~std::uint64_t(0)) break;
        }

        // Multiply and subtract qhat * vn from un[j .. j+n].
        std::uint64_t borrow = 0, carry = 0;
        for (std::size_t i = 0; i < n; ++i)
        {
            const u128 p = qhat * vn[i] + carry;
            carry = std::uint64_t(p >> 64);
            const std::uint64_t plo = std::uint64_t(p);
            const std::uint64_t u = un[i + j];
            const std::uint64_t t = u - plo - borrow;
            borrow = (u < plo || (u == plo && borrow != 0)) ? 1 : 0;
            un[i + j] = t;
        }
        const std::uint64_t u = un[j + n];
        const std::uint64_t t = u - carry - borrow;
        const bool negative = u < carry || (u == carry && borrow != 0);
        un[j + n] = t;

        if (negative)
        {
            --qhat;
            std::uint64_t c = 0;
            for (std::size_t i = 0; i < n; ++i)
            {
                const u128 sum = u128(un[i + j]) + vn[i] + c;
                un[i + j] = std::uint64_t(sum);
                c = std::uint64_t(sum >> 64);
            }
            un[j + n] += c;
        }
        q[j] = std::uint64_t(qhat);
    }

    un.resize(n);
    BigUint rem = from_limbs(std::move(un));
    rem >>= std::size_t(s);
    return {from_limbs(std::move(q)), std::move(rem)};
}

std::uint64_t BigUint::mod_u64(std::uint64_t divisor) const
{
    if (divisor == 0) throw std::domain_error("BigUint division by zero");
    u128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) rem = ((rem << 64) | limbs_[i]) % divisor;
    return std::uint64_t(rem);
}

std::string BigUint::to_decimal() const
{
    if (is_zero()) return "0";
    std::vector<limb_type> work = limbs_;
    std::vector<std::uint64_t> chunks;
    while (!work.empty()) chunks.push_back(div_small(work, decimal_chunk));

    std::string out = std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;)
    {
        const std::string part = std::to_string(chunks[i]);
        out.append(std::size_t(decimal_chunk_digits) - part.size(), '0');
        out += part;
    }
    return out;
}

BigUint gcd(BigUint a, BigUint b)
{
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const std::size_t za = a.trailing_zeros(), zb = b.trailing_zeros();
    const std::size_t common = std::min(za, zb);
    a >>= za;
    b >>= zb;
    // Both odd from here on.
    while (true)
    {
        if (a.fits_u64() && b.fits_u64())
        {
            std::uint64_t x = a.low_u64(), y = b.low_u64();
            while (x != y)
            {
                if (x > y) { x -= y; x >>= std::countr_zero(x); }
                else { y -= x; y >>= std::countr_zero(y); }
            }
            return BigUint(x) << common;
        }
        const auto cmp = a <=> b;
        if (cmp == 0) break;
        if (cmp > 0) { a -= b; a >>= a.trailing_zeros(); }
        else { b -= a; b >>= b.trailing_zeros(); }
    }
    return a << common;
}

SignedBig::SignedBig(std::int64_t value)
    : negative(value < 0),
      magnitude(value < 0 ? std::uint64_t(0) - std::uint64_t(value) : std::uint64_t(value))
{}

}  // namespace twoadic

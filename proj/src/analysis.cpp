#include "twoadic/analysis.hpp"

#include <bit>

#include "twoadic/error.hpp"

namespace twoadic {

std::map<std::int64_t, std::size_t> AutocorrSpectrum::out_of_phase_histogram() const
{
    std::map<std::int64_t, std::size_t> h;
    for (std::size_t tau = 1; tau < values.size(); ++tau) ++h[values[tau]];
    return h;
}

AutocorrSpectrum autocorrelation(const BinarySequence & s)
{
    using word = BinarySequence::word_type;
    constexpr std::size_t wb = BinarySequence::word_bits;
    const std::size_t n = s.size();
    const std::size_t nw = (n + wb - 1) / wb;

    // Two consecutive periods packed, so L^tau(s) is a bit window [tau, tau + N).
    std::vector<word> twice(2 * nw + 1, 0);
    for (std::size_t i = 0; i < 2 * n; ++i)
    {
        if (s[i % n]) twice[i / wb] |= word(1) << (i % wb);
    }
    const auto base = s.words();
    const word tail_mask = (n % wb == 0) ? ~word(0) : (word(1) << (n % wb)) - 1;

    AutocorrSpectrum out;
    out.n = n;
    out.values.resize(n);
    for (std::size_t tau = 0; tau < n; ++tau)
    {
        const std::size_t w0 = tau / wb, sh = tau % wb;
        std::size_t diff = 0;
        for (std::size_t i = 0; i < nw; ++i)
        {
            word v = twice[w0 + i] >> sh;
            if (sh != 0) v |= twice[w0 + i + 1] << (wb - sh);
            if (i + 1 == nw) v &= tail_mask;
            diff += std::size_t(std::popcount(base[i] ^ v));
        }
        out.values[tau] = std::int64_t(n) - 2 * std::int64_t(diff);
    }
    return out;
}

AutocorrSpectrum lemma1_spectrum(const ConstructionParams & params, ClosedForm form)
{
    const std::uint64_t p = params.p();
    const std::uint64_t d = params.d;
    const std::int64_t b = params.b();
    const CyclotomicClasses classes(p, params.g());
    // Sign applied to odd tau1 in the adjusted form; +1 when w0 != w1.
    const std::int64_t eps = (form == ClosedForm::w_adjusted && params.w[0] == params.w[1]) ? -1 : 1;

    AutocorrSpectrum out;
    out.n = std::size_t(4 * p);
    out.values.resize(out.n);
    out.values[0] = std::int64_t(4 * p);
    for (std::size_t tau = 1; tau < out.n; ++tau)
    {
        const std::uint64_t tau1 = tau % 4, tau2 = tau / 4;
        std::int64_t v = 0;
        if (tau1 == 0)
        {
            v = -4;
        }
        else if (tau1 == 2)
        {
            v = ((tau2 + 2 * d) % p == 0) ? 4 : 0;
        }
        else if (tau1 == 1)
        {
            const std::uint64_t r = (tau2 + d) % p;
            v = (r == 0) ? -4 : (classes.in_even_classes(r) ? -4 * b : 4 * b);
            v *= eps;
        }
        else
        {
            const std::uint64_t r = (tau2 + 3 * d) % p;
            const std::int64_t residue_sign = (form == ClosedForm::as_published) ? 1 : -1;
            v = (r == 0) ? -4 : residue_sign * (classes.in_even_classes(r) ? 4 * b : -4 * b);
            v *= eps;
        }
        out.values[tau] = v;
    }
    return out;
}

TwoAdicReport two_adic_complexity(const BinarySequence & s)
{
    const MersenneResidue s2 = eval_S(s);
    TwoAdicReport r;
    r.n = s.size();
    r.s2 = s2.value();
    r.gcd = gcd_with_modulus(s2);
    r.f = s2.modulus() / r.gcd;
    r.phi = (r.f + BigUint(1)).bit_length() - 1;
    return r;
}

HuIdentityResult hu_identity_check(const BinarySequence & s, const AutocorrSpectrum & spectrum)
{
    const std::size_t n = s.size();
    if (n < 2) throw Error("hu_identity_check requires N >= 2");
    if (spectrum.n != n) throw Error("spectrum period does not match sequence");

    const MersenneResidue st = eval_S(s) * eval_T_inv(s);
    const MersenneResidue lhs = (st + st).negated();

    BigUint pos, neg;
    for (std::size_t tau = 0; tau < n; ++tau)
    {
        const std::int64_t v = spectrum.values[tau];
        if (v > 0) pos += BigUint(std::uint64_t(v)) << tau;
        else if (v < 0) neg += BigUint(std::uint64_t(-v)) << tau;
    }
    const MersenneResidue rhs = reduce(pos, n) - reduce(neg, n);
    return HuIdentityResult{lhs == rhs, lhs, rhs};
}

HuIdentityResult hu_identity_check(const BinarySequence & s)
{
    return hu_identity_check(s, autocorrelation(s));
}

std::size_t linear_complexity(const BinarySequence & s)
{
    const std::size_t n = 2 * s.size();
    std::vector<std::uint8_t> seq(n);
    for (std::size_t i = 0; i < n; ++i) seq[i] = s.at(i) ? 1 : 0;

    std::vector<std::uint8_t> c(n + 1, 0), b(n + 1, 0), t;
    c[0] = b[0] = 1;
    std::size_t l = 0;
    std::ptrdiff_t m = -1;
    for (std::size_t i = 0; i < n; ++i)
    {
        std::uint8_t disc = seq[i];
        for (std::size_t j = 1; j <= l; ++j) disc ^= std::uint8_t(c[j] & seq[i - j]);
        if (disc == 0) continue;
        t = c;
        const std::size_t shift = std::size_t(std::ptrdiff_t(i) - m);
        for (std::size_t j = 0; j + shift <= n; ++j) c[j + shift] ^= b[j];
        if (2 * l <= i)
        {
            l = i + 1 - l;
            m = std::ptrdiff_t(i);
            b = std::move(t);
        }
    }
    return l;
}

}  // namespace twoadic

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "twoadic/bigint.hpp"
#include "twoadic/bigmod.hpp"
#include "twoadic/sequence.hpp"

namespace twoadic {

/// Periodic autocorrelation AC(tau), tau = 0..N-1.
struct AutocorrSpectrum
{
    std::size_t n = 0;
    std::vector<std::int64_t> values;

    /// value -> multiplicity over tau = 1..N-1.
    [[nodiscard]] std::map<std::int64_t, std::size_t> out_of_phase_histogram() const;

    friend bool operator==(const AutocorrSpectrum &, const AutocorrSpectrum &) = default;
};

/// AC(tau) = sum_t (-1)^(s(t) + s(t + tau)), computed word-wise as N - 2 * popcount(s xor L^tau s).
[[nodiscard]] AutocorrSpectrum autocorrelation(const BinarySequence & s);

/// Which closed form to materialize for the interleaved construction.
enum class ClosedForm
{
    /// The nine cases exactly as printed: w-independent, with the tau1 = 3
    /// residue cases carrying +4b on D0 u D2.
    as_published,
    /// The form the construction actually satisfies: odd tau1 values carry the
    /// factor eps = (-1)^(w0 + w1 + 1), and tau1 = 3 shares the tau1 = 1 sign
    /// pattern (-4 at zero, -4b on D0 u D2, +4b on D1 u D3).
    w_adjusted,
};

/// Closed-form spectrum for tau = tau1 + 4 tau2 using params.b().
[[nodiscard]] AutocorrSpectrum lemma1_spectrum(const ConstructionParams & params,
                                               ClosedForm form = ClosedForm::as_published);

struct TwoAdicReport
{
    std::size_t n = 0;
    BigUint s2;   // canonical residue of S(2)
    BigUint gcd;  // gcd(S(2), 2^N - 1)
    BigUint f;    // (2^N - 1) / gcd
    std::size_t phi = 0;
};

/// floor(log2(f + 1)) with f = (2^N - 1) / gcd(2^N - 1, S(2)); exact integer arithmetic.
[[nodiscard]] TwoAdicReport two_adic_complexity(const BinarySequence & s);

struct HuIdentityResult
{
    bool holds = false;
    MersenneResidue lhs;  // -2 S(2) T(1/2)
    MersenneResidue rhs;  // N + sum_{tau >= 1} AC(tau) 2^tau
};

/// Checks -2 S(2) T(2^-1) = N + sum AC(tau) 2^tau (mod 2^N - 1). Requires N >= 2.
[[nodiscard]] HuIdentityResult hu_identity_check(const BinarySequence & s);
[[nodiscard]] HuIdentityResult hu_identity_check(const BinarySequence & s, const AutocorrSpectrum & spectrum);

/// Berlekamp-Massey over GF(2) on two periods.
[[nodiscard]] std::size_t linear_complexity(const BinarySequence & s);

}  // namespace twoadic

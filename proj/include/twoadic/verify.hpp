#pragma once

#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "twoadic/analysis.hpp"
#include "twoadic/bigint.hpp"
#include "twoadic/sequence.hpp"

namespace twoadic {

struct Witness
{
    std::string key;
    std::string value;  // decimal for integers, "true"/"false" for flags
};

struct CheckReport
{
    std::string check;
    std::uint64_t p = 0;
    std::uint64_t g = 0;  // 0 when the check depends on p only
    std::optional<WVector> w;
    int b = 0;  // 0 when not applicable
    bool pass = false;
    std::vector<Witness> witnesses;

    void add(std::string key, const BigUint & value) { witnesses.push_back({std::move(key), value.to_decimal()}); }
    template <std::integral T>
        requires(!std::same_as<T, bool>)
    void add(std::string key, T value)
    {
        witnesses.push_back({std::move(key), std::to_string(value)});
    }
    void add(std::string key, bool value) { witnesses.push_back({std::move(key), value ? "true" : "false"}); }
    void add(std::string key, std::string value) { witnesses.push_back({std::move(key), std::move(value)}); }
    void add(std::string key, const char * value) { add(std::move(key), std::string(value)); }
    [[nodiscard]] const std::string * find(std::string_view key) const;
};

// Individual checks. Sequence overloads check a supplied fixture in place of
// the constructed sequence, so corrupted inputs can be verified.

/// Brute-force spectrum vs the closed form, retrying with -b (the sign gate).
/// Witness "matched_b" is the sign that matched (0 if neither did).
[[nodiscard]] CheckReport check_lemma1(const ConstructionParams & params, ClosedForm form = ClosedForm::as_published);
[[nodiscard]] CheckReport check_lemma1(const ConstructionParams & params, const BinarySequence & s,
                                       ClosedForm form = ClosedForm::as_published);

/// S(2) T(1/2) against the closed-form congruence modulo 2^(4p) - 1 using params.b().
[[nodiscard]] CheckReport check_lemma3_identity(const ConstructionParams & params,
                                                ClosedForm form = ClosedForm::as_published);
[[nodiscard]] CheckReport check_lemma3_identity(const ConstructionParams & params, const BinarySequence & s,
                                                ClosedForm form = ClosedForm::as_published);

/// gcd(S(2), 3) = 1, 5 | S(2), 3 | 2^(2p) - 1, 5 | 2^(2p) + 1.
[[nodiscard]] CheckReport check_small_factor_gcds(const ConstructionParams & params);
[[nodiscard]] CheckReport check_small_factor_gcds(const ConstructionParams & params, const BinarySequence & s);

/// gcd(p, 2^p - 1) = 1 and gcd(p + 4, (2^p + 1) / 3) = 1. Throws Error unless p is an odd prime.
[[nodiscard]] CheckReport check_coprimality_facts(std::uint64_t p);

/// 2p <= phi <= 4p - 2, gcd(S(2), 2^(2p) - 1) = 1 and 5 | gcd(S(2), 2^(4p) - 1).
[[nodiscard]] CheckReport check_theorem1(const ConstructionParams & params);
[[nodiscard]] CheckReport check_theorem1(const ConstructionParams & params, const BinarySequence & s);

/// Hu's identity on the sequence.
[[nodiscard]] CheckReport check_hu_identity(const ConstructionParams & params, const BinarySequence & s);

// Grid configuration.

struct GPolicy
{
    enum class Kind { smallest, all, value };
    Kind kind = Kind::smallest;
    std::uint64_t value = 0;  // used when kind == value
};

struct WPolicy
{
    enum class Kind { single, all };
    Kind kind = Kind::single;
    WVector single{0, 1, 0, 1};
};

struct GridPoint
{
    std::uint64_t p = 0;
    std::uint64_t g = 0;
    WVector w{};

    friend auto operator<=>(const GridPoint &, const GridPoint &) = default;
};

/// (p, g, w) in ascending order for every eligible p <= limit. An explicit g
/// only yields points for primes where it is a primitive root.
[[nodiscard]] std::vector<GridPoint> build_grid(std::uint64_t limit, const GPolicy & g_policy, const WPolicy & w_policy);

struct RunOptions
{
    GPolicy g_policy;
    WPolicy w_policy;
    ClosedForm form = ClosedForm::as_published;
    unsigned jobs = 1;
    /// When nonzero, only grid points with this p are run.
    std::uint64_t only_p = 0;
    /// Sequences that replace the construction at given grid points; points
    /// not already in the grid are added.
    std::map<GridPoint, BinarySequence> fixtures;
};

struct RunSummary
{
    std::vector<CheckReport> reports;
    std::size_t passed = 0;
    std::size_t failed = 0;

    [[nodiscard]] bool ok() const noexcept { return failed == 0; }
    /// First failing report, if any.
    [[nodiscard]] const CheckReport * first_failure() const noexcept;
};

/// Every check at one grid point, in a fixed order. The autocorrelation sign gate pins
/// the b used by the S(2) T(1/2) congruence check.
[[nodiscard]] std::vector<CheckReport> verify_point(const ConstructionParams & params, const BinarySequence & s,
                                                    ClosedForm form);

/// Runs the harness over the grid; reports are ordered by (p, g, w) regardless of jobs.
[[nodiscard]] RunSummary run_all(std::uint64_t limit, const RunOptions & options);

// Conjecture survey.

struct SurveyRow
{
    std::uint64_t p = 0;
    std::uint64_t g = 0;
    WVector w{};
    BigUint gcd_full;   // gcd(S(2), 2^(4p) - 1)
    BigUint gcd_minus;  // gcd(S(2), 2^(2p) - 1)
    BigUint gcd_plus;   // gcd(S(2), 2^(2p) + 1)
    std::size_t phi = 0;
    std::uint64_t lower_bound = 0;  // 2p
    std::uint64_t upper_bound = 0;  // 4p - 2

    [[nodiscard]] bool gcd_plus_is_five() const { return gcd_plus == BigUint(5); }
    [[nodiscard]] bool factorization_consistent() const { return gcd_full == gcd_minus * gcd_plus; }
};

[[nodiscard]] SurveyRow survey_row(const ConstructionParams & params);
[[nodiscard]] std::vector<SurveyRow> survey_conjecture(std::uint64_t limit, const GPolicy & g_policy,
                                                       const WPolicy & w_policy, unsigned jobs = 1);

}  // namespace twoadic

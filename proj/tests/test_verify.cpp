#include <doctest.h>

#include "twoadic/error.hpp"
#include "twoadic/verify.hpp"

using namespace twoadic;

namespace {

const WVector w0101{0, 1, 0, 1};
const WVector w0000{0, 0, 0, 0};

std::string witness(const CheckReport & r, std::string_view key)
{
    const std::string * v = r.find(key);
    REQUIRE(v != nullptr);
    return *v;
}

}  // namespace

TEST_CASE("check_lemma1 sign gate")
{
    const auto params = make_construction(13, 2, w0101);

    const auto adjusted = check_lemma1(params, ClosedForm::w_adjusted);
    CHECK(adjusted.pass);
    CHECK(witness(adjusted, "sign") == "jacobi");
    CHECK(witness(adjusted, "matched_b") == "1");
    CHECK(witness(adjusted, "optimal_magnitude") == "true");

    const auto published = check_lemma1(params);
    CHECK_FALSE(published.pass);
    CHECK(witness(published, "sign") == "none");
    CHECK(witness(published, "other_form_matched_b") == "1");
    CHECK(witness(published, "first_mismatch_tau") == "3");
    CHECK(witness(published, "optimal_magnitude") == "true");

    // Starting from the wrong sign, the gate recovers the right one.
    const auto flipped = check_lemma1(params.with_b(-params.b()), ClosedForm::w_adjusted);
    CHECK(flipped.pass);
    CHECK(witness(flipped, "sign") == "flipped");

    for (const auto g : all_primitive_roots(5))
    {
        for (const auto & w : admissible_w) CHECK(check_lemma1(make_construction(5, g, w), ClosedForm::w_adjusted).pass);
    }

    auto corrupted = su_sequence(params);
    corrupted.flip(17);
    const auto bad = check_lemma1(params, corrupted, ClosedForm::w_adjusted);
    CHECK_FALSE(bad.pass);
    CHECK(bad.find("first_mismatch_tau") != nullptr);
    CHECK_THROWS_AS((void)check_lemma1(params, BinarySequence(51)), SequenceError);
}

TEST_CASE("check_lemma3_identity")
{
    for (const std::uint64_t p : {5ull, 13ull, 29ull, 53ull})
    {
        for (const auto g : all_primitive_roots(p))
        {
            for (const auto & w : admissible_w)
            {
                const auto params = make_construction(p, g, w);
                REQUIRE(check_lemma3_identity(params, ClosedForm::w_adjusted).pass);
                REQUIRE_FALSE(check_lemma3_identity(params.with_b(-params.b()), ClosedForm::w_adjusted).pass);
                // The printed congruence does not hold under either sign.
                REQUIRE_FALSE(check_lemma3_identity(params).pass);
                REQUIRE_FALSE(check_lemma3_identity(params.with_b(-params.b())).pass);
            }
        }
    }
}

TEST_CASE("check_small_factor_gcds")
{
    const auto r = check_small_factor_gcds(make_construction(13, 2, w0101));
    CHECK(r.pass);
    CHECK(witness(r, "gcd_s2_3") == "1");
    CHECK(witness(r, "gcd_s2_5") == "5");

    // With w0 = w1 each column has the same weight, so 3 | S(2).
    const auto z = check_small_factor_gcds(make_construction(13, 2, w0000));
    CHECK_FALSE(z.pass);
    CHECK(witness(z, "gcd_s2_3") == "3");
    CHECK(witness(z, "gcd_s2_5") == "5");
    CHECK(witness(z, "part_ii") == "true");

    for (const auto p : eligible_primes(500))
    {
        const auto q = check_small_factor_gcds(make_construction(p, smallest_primitive_root(p), {1, 0, 1, 0}));
        REQUIRE(q.pass);
    }
}

TEST_CASE("check_coprimality_facts")
{
    CHECK(check_coprimality_facts(13).pass);
    CHECK(check_coprimality_facts(3).pass);
    CHECK(check_coprimality_facts(29).pass);
    for (std::uint64_t p = 3; p <= 500; p += 2)
    {
        if (is_prime(p)) REQUIRE(check_coprimality_facts(p).pass);
    }
    CHECK_THROWS_AS((void)check_coprimality_facts(2), Error);
    CHECK_THROWS_AS((void)check_coprimality_facts(9), Error);
}

TEST_CASE("check_theorem1")
{
    const auto r = check_theorem1(make_construction(13, 2, w0101));
    CHECK(r.pass);
    CHECK(witness(r, "phi") == "49");
    CHECK(witness(r, "gcd_full") == "5");

    // phi for the smallest primitive root, frozen from an independent
    // arbitrary-precision evaluation of gcd(S(2), 2^4p - 1).
    const std::vector<std::pair<std::uint64_t, std::pair<std::size_t, std::size_t>>> expected = {
        {5, {17, 13}}, {13, {49, 48}}, {29, {113, 112}}, {53, {209, 208}},
        {173, {689, 688}}, {229, {913, 912}}, {293, {1169, 1168}},
    };
    for (const auto & [p, phis] : expected)
    {
        const auto g = smallest_primitive_root(p);
        const auto alternating = check_theorem1(make_construction(p, g, w0101));
        const auto constant = check_theorem1(make_construction(p, g, w0000));
        REQUIRE(alternating.pass);
        REQUIRE(witness(alternating, "phi") == std::to_string(phis.first));
        REQUIRE(witness(constant, "phi") == std::to_string(phis.second));
        // The bound holds for w0 = w1, but the coprimality step does not.
        REQUIRE_FALSE(constant.pass);
        REQUIRE(witness(constant, "lower_ok") == "true");
        REQUIRE(witness(constant, "upper_ok") == "true");
        REQUIRE(witness(constant, "gcd_minus") == "3");
        REQUIRE(witness(constant, "five_divides_gcd_ok") == "true");
    }
}

TEST_CASE("grid construction")
{
    CHECK(build_grid(4, {}, {}).empty());
    const auto g = build_grid(60, {GPolicy::Kind::all}, {WPolicy::Kind::all});
    CHECK(g.size() == (2 + 4 + 12 + 24) * 4);
    CHECK(std::is_sorted(g.begin(), g.end()));
    const auto explicit_g = build_grid(60, {GPolicy::Kind::value, 2}, {});
    CHECK(explicit_g.size() == 4);  // 2 is a primitive root of 5, 13, 29 and 53
    const auto three = build_grid(60, {GPolicy::Kind::value, 3}, {});
    CHECK(three.size() == 3);       // 3 has order 3 mod 13
}

TEST_CASE("run_all")
{
    RunOptions adjusted;
    adjusted.form = ClosedForm::w_adjusted;
    const auto good = run_all(60, adjusted);
    CHECK(good.ok());
    CHECK(good.reports.size() == 4 * 6);
    CHECK(good.reports.front().check == "lemma5");

    const auto published = run_all(60, RunOptions{});
    CHECK_FALSE(published.ok());
    REQUIRE(published.first_failure() != nullptr);
    CHECK(published.first_failure()->check == "lemma1");

    CHECK(run_all(4, RunOptions{}).ok());
    CHECK(run_all(4, RunOptions{}).reports.empty());

    RunOptions with_fixture = adjusted;
    auto corrupted = su_sequence(make_construction(13, 2, w0101));
    corrupted.flip(0);
    with_fixture.fixtures.emplace(GridPoint{13, 2, w0101}, corrupted);
    const auto bad = run_all(60, with_fixture);
    CHECK_FALSE(bad.ok());
    CHECK(bad.first_failure()->p == 13);

    RunOptions parallel = adjusted;
    parallel.w_policy.kind = WPolicy::Kind::all;
    parallel.g_policy.kind = GPolicy::Kind::all;
    RunOptions serial = parallel;
    parallel.jobs = 4;
    const auto a = run_all(60, serial), b = run_all(60, parallel);
    REQUIRE(a.reports.size() == b.reports.size());
    for (std::size_t i = 0; i < a.reports.size(); ++i)
    {
        REQUIRE(a.reports[i].check == b.reports[i].check);
        REQUIRE(a.reports[i].p == b.reports[i].p);
        REQUIRE(a.reports[i].g == b.reports[i].g);
        REQUIRE(a.reports[i].pass == b.reports[i].pass);
    }
}

TEST_CASE("survey_conjecture")
{
    CHECK(survey_conjecture(4, {}, {}).empty());

    const auto rows = survey_conjecture(60, {}, {WPolicy::Kind::all});
    REQUIRE(rows.size() == 16);
    for (const auto & r : rows)
    {
        REQUIRE(r.factorization_consistent());
        REQUIRE(r.lower_bound == 2 * r.p);
        REQUIRE(r.upper_bound == 4 * r.p - 2);
        REQUIRE(r.gcd_full.mod_u64(5) == 0);
    }

    const auto & p13 = rows[4 + 1];
    CHECK(p13.p == 13);
    CHECK(p13.w == w0101);
    CHECK(p13.gcd_full == BigUint(5));
    CHECK(p13.gcd_plus == BigUint(5));
    CHECK(p13.gcd_minus == BigUint(1));
    CHECK(p13.phi == 49);

    const auto & p5 = rows[1];
    CHECK(p5.gcd_minus == BigUint(1));

    // p = 5 with constant w: gcd(S(2), 2^10 + 1) = 25, not 5.
    CHECK(rows[0].w == w0000);
    CHECK(rows[0].gcd_plus == BigUint(25));
    CHECK(rows[0].gcd_minus == BigUint(3));

    const auto again = survey_conjecture(60, {}, {WPolicy::Kind::all}, 3);
    for (std::size_t i = 0; i < rows.size(); ++i) REQUIRE(again[i].gcd_full == rows[i].gcd_full);
}

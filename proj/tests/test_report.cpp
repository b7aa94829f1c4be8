#include <doctest.h>

#include <sstream>

#include "twoadic/report.hpp"

using namespace twoadic;

TEST_CASE("csv escaping")
{
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("two-adic report record")
{
    const auto j = to_json(two_adic_complexity(su_sequence(make_construction(13, 2, {0, 1, 0, 1}))));
    CHECK(j["N"] == 52);
    CHECK(j["gcd"] == "5");
    CHECK(j["f"] == "900719925474099");
    CHECK(j["phi"] == 49);
    CHECK(j["S2"].is_string());
}

TEST_CASE("check report csv uses the union of witness keys")
{
    CheckReport a;
    a.check = "x";
    a.p = 5;
    a.g = 2;
    a.w = WVector{0, 1, 0, 1};
    a.b = 1;
    a.pass = true;
    a.add("k1", std::uint64_t(7));
    CheckReport b;
    b.check = "y";
    b.p = 5;
    b.add("k2", "v,2");

    std::ostringstream out;
    const std::vector<CheckReport> rs{a, b};
    write_csv(out, rs);
    CHECK(out.str() == "p,g,w,b,check,pass,k1,k2\n5,2,0101,1,x,true,7,\n5,0,,0,y,false,,\"v,2\"\n");

    const auto j = to_json(a);
    CHECK(j.dump() == R"({"check":"x","p":5,"g":2,"w":"0101","b":1,"pass":true,"k1":"7"})");
}

TEST_CASE("survey csv is deterministic")
{
    const auto rows = survey_conjecture(30, {}, {WPolicy::Kind::all});
    std::ostringstream a, b;
    write_csv(a, rows);
    write_csv(b, survey_conjecture(30, {}, {WPolicy::Kind::all}, 4));
    CHECK(a.str() == b.str());
    CHECK(a.str().starts_with("p,g,w,gcd_full,gcd_minus,gcd_plus,gcd_plus_is_5,"));
}

#include "twoadic/report.hpp"

#include <algorithm>
#include <vector>

namespace twoadic {

namespace {

std::string w_or_empty(const std::optional<WVector> & w)
{
    return w ? format_w(*w) : std::string();
}

}  // namespace

nlohmann::ordered_json to_json(const TwoAdicReport & r)
{
    nlohmann::ordered_json j;
    j["N"] = r.n;
    j["S2"] = r.s2.to_decimal();
    j["gcd"] = r.gcd.to_decimal();
    j["f"] = r.f.to_decimal();
    j["phi"] = r.phi;
    return j;
}

nlohmann::ordered_json to_json(const AutocorrSpectrum & s)
{
    nlohmann::ordered_json j;
    j["N"] = s.n;
    j["values"] = s.values;
    return j;
}

nlohmann::ordered_json to_json(const CheckReport & r)
{
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["p"] = r.p;
    j["g"] = r.g;
    j["w"] = w_or_empty(r.w);
    j["b"] = r.b;
    j["pass"] = r.pass;
    for (const auto & w : r.witnesses) j[w.key] = w.value;
    return j;
}

nlohmann::ordered_json to_json(const SurveyRow & r)
{
    nlohmann::ordered_json j;
    j["p"] = r.p;
    j["g"] = r.g;
    j["w"] = format_w(r.w);
    j["gcd_full"] = r.gcd_full.to_decimal();
    j["gcd_minus"] = r.gcd_minus.to_decimal();
    j["gcd_plus"] = r.gcd_plus.to_decimal();
    j["gcd_plus_is_5"] = r.gcd_plus_is_five();
    j["factorization_consistent"] = r.factorization_consistent();
    j["phi"] = r.phi;
    j["lower_bound"] = r.lower_bound;
    j["upper_bound"] = r.upper_bound;
    return j;
}

std::string csv_escape(const std::string & field)
{
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (const char c : field)
    {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_csv(std::ostream & out, std::span<const CheckReport> reports)
{
    std::vector<std::string> keys;
    for (const auto & r : reports)
    {
        for (const auto & w : r.witnesses)
        {
            if (std::find(keys.begin(), keys.end(), w.key) == keys.end()) keys.push_back(w.key);
        }
    }

    out << "p,g,w,b,check,pass";
    for (const auto & k : keys) out << ',' << csv_escape(k);
    out << '\n';
    for (const auto & r : reports)
    {
        out << r.p << ',' << r.g << ',' << w_or_empty(r.w) << ',' << r.b << ',' << csv_escape(r.check) << ','
            << (r.pass ? "true" : "false");
        for (const auto & k : keys)
        {
            out << ',';
            if (const std::string * v = r.find(k)) out << csv_escape(*v);
        }
        out << '\n';
    }
}

void write_csv(std::ostream & out, std::span<const SurveyRow> rows)
{
    out << "p,g,w,gcd_full,gcd_minus,gcd_plus,gcd_plus_is_5,factorization_consistent,phi,lower_bound,upper_bound\n";
    for (const auto & r : rows)
    {
        out << r.p << ',' << r.g << ',' << format_w(r.w) << ',' << r.gcd_full.to_decimal() << ','
            << r.gcd_minus.to_decimal() << ',' << r.gcd_plus.to_decimal() << ',' << (r.gcd_plus_is_five() ? "true" : "false")
            << ',' << (r.factorization_consistent() ? "true" : "false") << ',' << r.phi << ',' << r.lower_bound << ','
            << r.upper_bound << '\n';
    }
}

}  // namespace twoadic

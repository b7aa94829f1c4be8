#pragma once

#include <ostream>
#include <span>
#include <string>

#include <json.hpp>

#include "twoadic/analysis.hpp"
#include "twoadic/verify.hpp"

namespace twoadic {

// Flat-record serialization. Big integers are always decimal strings.
//
// TwoAdicReport   -> N, S2, gcd, f, phi
// AutocorrSpectrum-> N, values
// CheckReport     -> check, p, g, w, b, pass, then one key per witness
// SurveyRow       -> p, g, w, gcd_full, gcd_minus, gcd_plus, gcd_plus_is_5,
//                    factorization_consistent, phi, lower_bound, upper_bound

[[nodiscard]] nlohmann::ordered_json to_json(const TwoAdicReport & r);
[[nodiscard]] nlohmann::ordered_json to_json(const AutocorrSpectrum & s);
[[nodiscard]] nlohmann::ordered_json to_json(const CheckReport & r);
[[nodiscard]] nlohmann::ordered_json to_json(const SurveyRow & r);

/// RFC 4180 field quoting.
[[nodiscard]] std::string csv_escape(const std::string & field);

/// Header "p,g,w,b,check,pass" followed by the union of witness keys in first-seen order.
void write_csv(std::ostream & out, std::span<const CheckReport> reports);
void write_csv(std::ostream & out, std::span<const SurveyRow> rows);

}  // namespace twoadic

#pragma once

// Text and JSON encodings shared by the CLI.
//
// Polynomials: a sum of terms "c*x^k", "c*x", "x^k", "x" or "c" where c is an
// integer, a fraction "a/b" or a decimal literal ("0.25", "1.5e-3"). Decimals
// are converted to the exact rational given by their place value. Any single
// letter may serve as the variable, but one expression uses only one.
//
// Series: {"coeffs": ["1", "-1/2", ...], "order": D}.

#include <string>
#include <string_view>

#include <json.hpp>

#include "arithcap/exact_algebra.hpp"

namespace arithcap {

RatPoly parse_polynomial(std::string_view text);
mpq_class parse_rational(std::string_view text);

std::string to_string(const RatPoly& p, char var = 'x');
std::string to_string(const IntPoly& p, char var = 'x');
std::string to_string(const mpq_class& q);

nlohmann::json series_to_json(const RatSeries& s);
nlohmann::json series_to_json(const IntSeries& s);
RatSeries series_from_json(const nlohmann::json& j);

} // namespace arithcap

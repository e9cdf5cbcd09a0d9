#pragma once

#include <json.hpp>

#include <string>

#include "ghp/hermite.hpp"

namespace ghp {

/// {"r": int, "n": int, "terms": [[exponent, "decimal"], ...]}, exponents
/// strictly decreasing, coefficients as decimal strings of arbitrary size.
nlohmann::ordered_json poly_to_json(const IntPoly& poly, const FamilyParams& params);

struct TaggedPoly {
  FamilyParams params;
  IntPoly poly;
};

/// Inverse of poly_to_json. Throws MalformedPolynomial on schema violations
/// (non-decreasing exponents, zero or non-integer coefficients, bad r/n).
TaggedPoly poly_from_json(const nlohmann::ordered_json& j);

/// One "exponent,coefficient" line per term, exponents decreasing, each line
/// terminated by '\n'.
std::string poly_to_csv(const IntPoly& poly);

}  // namespace ghp

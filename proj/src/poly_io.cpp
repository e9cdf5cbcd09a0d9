#include "ghp/poly_io.hpp"

#include <limits>

#include "ghp/errors.hpp"

namespace ghp {

nlohmann::ordered_json poly_to_json(const IntPoly& poly, const FamilyParams& params) {
  nlohmann::ordered_json j;
  j["r"] = params.r();
  j["n"] = params.n();
  auto terms = nlohmann::ordered_json::array();
  for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it)
    terms.push_back({it->first, it->second.get_str()});
  j["terms"] = std::move(terms);
  return j;
}

TaggedPoly poly_from_json(const nlohmann::ordered_json& j) {
  try {
    FamilyParams params(j.at("r").get<int>(), j.at("n").get<int>());
    IntPoly poly;
    auto last = std::numeric_limits<std::size_t>::max();
    bool first = true;
    for (const auto& term : j.at("terms")) {
      if (!term.is_array() || term.size() != 2) throw MalformedPolynomial("term must be [exponent, coefficient]");
      if (!term[0].is_number_unsigned()) throw MalformedPolynomial("exponent must be a non-negative integer");
      const auto e = term[0].get<std::size_t>();
      if (!first && e >= last) throw MalformedPolynomial("exponents must be strictly decreasing");
      mpz_class c;
      if (c.set_str(term[1].get<std::string>(), 10) != 0)
        throw MalformedPolynomial("coefficient is not a decimal integer");
      if (c == 0) throw MalformedPolynomial("zero coefficients are not stored");
      poly.add_term(e, c);
      last = e;
      first = false;
    }
    return {params, std::move(poly)};
  } catch (const nlohmann::json::exception& ex) {
    throw MalformedPolynomial(std::string("polynomial JSON: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw MalformedPolynomial(std::string("polynomial JSON: ") + ex.what());
  }
}

std::string poly_to_csv(const IntPoly& poly) {
  std::string out;
  for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
    out += std::to_string(it->first);
    out += ',';
    out += it->second.get_str();
    out += '\n';
  }
  return out;
}

}  // namespace ghp

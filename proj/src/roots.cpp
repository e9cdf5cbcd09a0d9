#include "ghp/roots.hpp"

#include <mpfr.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ghp/format.hpp"
#include "ghp/detail/upoly.hpp"
#include "ghp/errors.hpp"
#include "ghp/exact_eval.hpp"
#include "mpfr_real.hpp"

namespace ghp {
namespace {

using detail::QPoly;
using detail::ZPoly;

constexpr int kRefineCap = 4000;

std::vector<RootInterval> isolate_positive(const ZPoly& p, int multiplicity) {
  std::vector<RootInterval> out;
  const auto seq = detail::sturm_sequence(p);
  const mpq_class bound = detail::root_bound(p);
  struct Pending {
    mpq_class lo, hi;
    int count;
  };
  std::vector<Pending> stack{{0, bound, detail::count_roots(seq, 0, bound)}};
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    if (cur.count == 0) continue;
    if (cur.count == 1) {
      out.push_back({cur.lo, cur.hi, multiplicity});
      continue;
    }
    mpq_class mid = (cur.lo + cur.hi) / 2;
    const int left = detail::count_roots(seq, cur.lo, mid);
    stack.push_back({mid, cur.hi, cur.count - left});
    stack.push_back({cur.lo, mid, left});
  }
  return out;
}

// One bisection step on (lo, hi] holding a single sign-changing root of p.
// Returns false once the root is pinned exactly.
bool bisect(const ZPoly& p, RootInterval& iv) {
  if (iv.lo == iv.hi) return false;
  const int s_hi = detail::sign_at(p, iv.hi);
  if (s_hi == 0) {
    iv.lo = iv.hi;
    return false;
  }
  mpq_class mid = (iv.lo + iv.hi) / 2;
  const int s_mid = detail::sign_at(p, mid);
  if (s_mid == 0) {
    iv.lo = mid;
    iv.hi = mid;
    return false;
  }
  if (s_mid == s_hi) iv.hi = mid;
  else iv.lo = mid;
  return true;
}

void refine_width(const ZPoly& p, RootInterval& iv, const mpq_class& width) {
  for (int i = 0; i < kRefineCap && iv.hi - iv.lo > width; ++i)
    if (!bisect(p, iv)) break;
}

struct FactorRoots {
  ZPoly factor;
  int multiplicity;
  std::vector<RootInterval> positive;
  std::vector<RootInterval> negative;  // intervals of -z
};

std::vector<FactorRoots> isolate_all(const Decomposition& dec, double tol) {
  std::vector<FactorRoots> out;
  const auto factors = detail::squarefree_factors(detail::to_rational(dec.q_poly));
  const mpq_class width(tol);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (detail::degree(factors[i]) < 1) continue;
    FactorRoots fr;
    fr.factor = detail::to_primitive_integer(factors[i]);
    fr.multiplicity = static_cast<int>(i) + 1;
    const int mult = fr.multiplicity;
    fr.positive = isolate_positive(fr.factor, mult);
    const ZPoly reflected = detail::reflect(fr.factor);
    fr.negative = isolate_positive(reflected, mult);
    for (auto& iv : fr.positive) refine_width(fr.factor, iv, width);
    for (auto& iv : fr.negative) refine_width(reflected, iv, width);
    out.push_back(std::move(fr));
  }
  return out;
}

double rth_root(const mpq_class& z, int r) {
  detail::MpfrReal v(z, 256);
  detail::MpfrReal out(256);
  mpfr_rootn_ui(out.get(), v.get(), static_cast<unsigned long>(r), MPFR_RNDN);
  return out.to_double();
}

double relative_backward_error(const IntPoly& poly, std::complex<double> xi) {
  const LogComplex value = eval_log_complex(poly, xi);
  if (value.is_zero) return 0.0;
  return std::exp(value.log_magnitude - log_abs_scale(poly, std::abs(xi)));
}

// Refines the z-interval until the x-space width is below tol and the base
// root passes the backward-error check.
RootOrbit make_orbit(const ZPoly& p, RootInterval iv, int r, double base_angle, const IntPoly& poly,
                     double tol) {
  auto x_width = [r](const RootInterval& v) {
    return rth_root(v.hi, r) - rth_root(v.lo, r);
  };
  for (int i = 0; i < kRefineCap && x_width(iv) > tol; ++i)
    if (!bisect(p, iv)) break;
  for (int i = 0;; ++i) {
    const double radius = rth_root((iv.lo + iv.hi) / 2, r);
    const double err = relative_backward_error(poly, std::polar(radius, base_angle));
    if (err <= tol) return {radius, base_angle, iv.multiplicity, err};
    if (i >= kRefineCap || !bisect(p, iv) || x_width(iv) == 0.0)
      throw ConvergenceError("root refinement: backward error " + std::to_string(err) +
                             " above tolerance at radius " + std::to_string(radius));
  }
}

std::vector<std::complex<double>> numeric_roots(const ZPoly& p) {
  // Companion matrix of the monic polynomial.
  const int d = detail::degree(p);
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  const double lead = p.back().get_d();
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -p[i].get_d() / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<std::complex<double>> out(solver.eigenvalues().data(), solver.eigenvalues().data() + d);
  return out;
}

// exp(i pi k / r), exact on the axes.
std::complex<double> unit_root(int k, int r) {
  k %= 2 * r;
  if ((2 * k) % r == 0) {
    switch ((2 * k / r) % 4) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, std::numbers::pi * k / r);
}

}  // namespace

Decomposition decompose(const IntPoly& poly, const FamilyParams& params) {
  if (poly.is_zero()) throw MalformedPolynomial("decompose: zero polynomial");
  Decomposition dec;
  dec.r = params.r();
  dec.n = params.n();
  dec.m = params.lowest_exponent();
  const std::size_t r = static_cast<std::size_t>(params.r());
  if (poly.lowest_exponent() != dec.m)
    throw MalformedPolynomial("decompose: lowest exponent " + std::to_string(poly.lowest_exponent()) +
                              " differs from r*ceil(n/r) - n = " + std::to_string(dec.m));
  dec.q_poly.assign((poly.degree() - dec.m) / r + 1, mpz_class(0));
  for (const auto& [e, c] : poly.terms()) {
    if ((e - dec.m) % r != 0)
      throw MalformedPolynomial("decompose: exponent " + std::to_string(e) +
                                " violates the congruence e = -n (mod r)");
    dec.q_poly[(e - dec.m) / r] = c;
  }
  return dec;
}

std::vector<RootInterval> positive_real_roots(const Decomposition& dec, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("positive_real_roots: tol must be > 0");
  std::vector<RootInterval> out;
  for (auto& fr : isolate_all(dec, tol))
    out.insert(out.end(), fr.positive.begin(), fr.positive.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.hi < b.hi; });
  return out;
}

RootSet roots_from_decomposition(const Decomposition& dec, const IntPoly& poly, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("all_roots: tol must be > 0");
  RootSet set;
  set.r = dec.r;
  set.n = dec.n;
  set.zero_multiplicity = static_cast<int>(dec.m);
  set.decomposition = dec;
  const double neg_angle = std::numbers::pi / dec.r;
  for (auto& fr : isolate_all(dec, tol)) {
    for (const auto& iv : fr.positive)
      set.orbits.push_back(make_orbit(fr.factor, iv, dec.r, 0.0, poly, tol));
    const ZPoly reflected = detail::reflect(fr.factor);
    for (const auto& iv : fr.negative)
      set.orbits.push_back(make_orbit(reflected, iv, dec.r, neg_angle, poly, tol));
    const int real_count = static_cast<int>(fr.positive.size() + fr.negative.size());
    const int missing = detail::degree(fr.factor) - real_count;
    if (missing > 0) {
      auto numeric = numeric_roots(fr.factor);
      std::sort(numeric.begin(), numeric.end(), [](const auto& a, const auto& b) {
        return std::abs(a.imag()) > std::abs(b.imag());
      });
      for (int k = 0; k < missing; ++k)
        for (int j = 0; j < fr.multiplicity; ++j) set.non_real_q_roots.push_back(numeric[k]);
    }
  }
  std::sort(set.orbits.begin(), set.orbits.end(), [](const auto& a, const auto& b) {
    return a.radius != b.radius ? a.radius < b.radius : a.base_angle < b.base_angle;
  });
  std::sort(set.non_real_q_roots.begin(), set.non_real_q_roots.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return set;
}

RootSet all_roots(const FamilyParams& params, double tol) {
  if (params.n() < 1) throw std::invalid_argument("all_roots needs n >= 1");
  const IntPoly poly = build_diffdiff(params);
  return roots_from_decomposition(decompose(poly, params), poly, tol);
}

int RootSet::total_multiplicity() const {
  int total = zero_multiplicity;
  for (const auto& o : orbits) total += r * o.multiplicity;
  total += r * static_cast<int>(non_real_q_roots.size());
  return total;
}

std::vector<RootSet::Root> RootSet::expand() const {
  std::vector<Root> out;
  if (zero_multiplicity > 0) out.push_back({{0.0, 0.0}, zero_multiplicity});
  const double step = 2.0 * std::numbers::pi / r;
  for (const auto& o : orbits) {
    const int offset = o.base_angle == 0.0 ? 0 : 1;
    for (int j = 0; j < r; ++j) out.push_back({o.radius * unit_root(offset + 2 * j, r), o.multiplicity});
  }
  for (const auto& z : non_real_q_roots) {
    const double radius = std::pow(std::abs(z), 1.0 / r);
    const double angle = std::arg(z) / r;
    for (int j = 0; j < r; ++j) out.push_back({std::polar(radius, angle + j * step), 1});
  }
  return out;
}

nlohmann::ordered_json roots_to_json(const RootSet& roots) {
  nlohmann::ordered_json j;
  j["r"] = roots.r;
  j["n"] = roots.n;
  j["zero_multiplicity"] = roots.zero_multiplicity;
  auto orbits = nlohmann::ordered_json::array();
  for (const auto& o : roots.orbits)
    orbits.push_back({{"radius", o.radius}, {"base_angle", o.base_angle}, {"multiplicity", o.multiplicity}});
  j["orbits"] = std::move(orbits);
  auto nonreal = nlohmann::ordered_json::array();
  for (const auto& z : roots.non_real_q_roots) nonreal.push_back({z.real(), z.imag()});
  j["non_real_q_roots"] = std::move(nonreal);
  return j;
}

std::string roots_to_csv(const RootSet& roots) {
  std::string out = "re,im,multiplicity\n";
  for (const auto& root : roots.expand()) {
    out += format_number(root.value.real());
    out += ',';
    out += format_number(root.value.imag());
    out += ',';
    out += std::to_string(root.multiplicity);
    out += '\n';
  }
  return out;
}

}  // namespace ghp

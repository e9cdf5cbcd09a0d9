#include "ghp/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <set>

#include "ghp/errors.hpp"
#include "ghp/exact_eval.hpp"
#include "ghp/format.hpp"
#include "ghp/hermite.hpp"
#include "ghp/poly_io.hpp"
#include "ghp/roots.hpp"

namespace ghp::cli {
namespace {

std::string case_label(int r, int n) { return "r=" + std::to_string(r) + " n=" + std::to_string(n); }

void tally(VerifyRow& row, bool ok, const std::string& label) {
  ++row.checked;
  if (!ok) {
    ++row.failed;
    if (row.counterexample.empty()) row.counterexample = label;
  }
}

bool coefficients_vanish_below_start(const FamilyParams& params, const IntPoly& poly) {
  const int r = params.r(), n = params.n();
  for (int k = 0; k <= n; ++k) {
    const mpz_class c = coefficient(params, k);
    if (r * k < n) {
      if (c != 0) return false;
    } else if (c != poly.coefficient(static_cast<std::size_t>(r * k - n))) {
      return false;
    }
  }
  return true;
}

struct Evaluated {
  LogComplex value;
  std::string status = "ok";
  std::string label;
};

std::string join_row(std::complex<double> x, const std::string& method, const Evaluated* e,
                     const LogComplex& exact, bool with_ratio) {
  std::string row = format_number(x.real()) + ',' + format_number(x.imag()) + ',' + method + ',';
  const bool finite = e->status == "ok" && std::isfinite(e->value.log_magnitude) &&
                      std::isfinite(e->value.argument);
  if (!finite) {
    row += ",,,,";
    row += e->status == "ok" ? std::string("error: non-finite") : e->status;
    return row + '\n';
  }
  row += format_number(e->value.log_magnitude) + ',' + format_number(e->value.argument) + ',';
  if (with_ratio && !exact.is_zero) {
    row += format_number(e->value.log_magnitude - exact.log_magnitude) + ',' +
           format_number(normalize_angle(e->value.argument - exact.argument));
  } else {
    row += ',';
  }
  return row + ",ok\n";
}

Evaluated approximate(const AsymptoticParams& params, std::complex<double> x, int n, bool outer) {
  Evaluated e;
  try {
    e.value = outer ? h_outer(params, x, n) : h_inner(params, x, n);
    if (e.value.is_zero) e.status = "zero";
  } catch (const DomainError& err) {
    e.status = std::string("error: ") + err.what();
  } catch (const ConvergenceError& err) {
    e.status = std::string("error: ") + err.what();
  }
  return e;
}

}  // namespace

int default_precision_bits() {
  const char* env = std::getenv("GHP_PRECISION_BITS");
  if (env == nullptr || *env == '\0') return kDefaultPrecisionBits;
  char* end = nullptr;
  const long bits = std::strtol(env, &end, 10);
  if (*end != '\0' || bits < 53 || bits > 1 << 20)
    throw UsageError(std::string("GHP_PRECISION_BITS must be an integer >= 53, got '") + env + "'");
  return static_cast<int>(bits);
}

std::string cmd_poly(int r, int n, const std::string& format) {
  const FamilyParams params(r, n);
  const IntPoly poly = build_diffdiff(params);
  if (format == "csv") return poly_to_csv(poly);
  if (format == "json") return poly_to_json(poly, params).dump(2) + '\n';
  throw UsageError("unknown format '" + format + "'");
}

bool VerifyReport::all_passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.failed == 0; });
}

std::string VerifyReport::to_csv() const {
  std::string out = "identity,checked,failed,status,counterexample\n";
  for (const auto& row : rows) {
    out += row.identity + ',' + std::to_string(row.checked) + ',' + std::to_string(row.failed) + ',' +
           (row.failed == 0 ? "pass" : "fail") + ',' + row.counterexample + '\n';
  }
  return out;
}

VerifyReport cmd_verify(int r_max, int n_max) {
  if (r_max < 2) throw UsageError("r-max must be >= 2");
  if (n_max < 0) throw UsageError("n-max must be >= 0");
  auto named = [](const char* name) {
    VerifyRow row;
    row.identity = name;
    return row;
  };
  VerifyRow cross = named("cross_construction"), degree = named("degree_leading"),
            lowest = named("lowest_exponent"), closure = named("diffdiff_closure"), ode = named("ode_residual"),
            genfun = named("genfun"), symmetry = named("symmetry"), at_zero = named("value_at_zero"),
            vanishing = named("coefficient_vanishing");
  for (int r = 2; r <= r_max; ++r) {
    const auto sequence = build_diffdiff_sequence(r, n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
      const FamilyParams params(r, n);
      const IntPoly& h = sequence[n];
      const std::string label = case_label(r, n);
      tally(cross, h == build_explicit(params) && h == build_recurrence(params), label);
      mpz_class lead;
      mpz_ui_pow_ui(lead.get_mpz_t(), r, n);
      tally(degree, h.degree() == params.degree() && h.leading_coefficient() == lead, label);
      const bool divides = n % r == 0;
      tally(lowest, h.lowest_exponent() == params.lowest_exponent() && (value_at_zero(params) != 0) == divides,
            label);
      IntPoly lhs = sequence[n + 1] + derivative(h);
      tally(closure, lhs == shifted(h, static_cast<std::size_t>(r - 1), mpz_class(r)), label);
      tally(ode, ode_residual(params).is_zero(), label);
      tally(symmetry, symmetry_check(h, params), label);
      tally(at_zero, value_at_zero(params) == h.coefficient(0), label);
      tally(vanishing, coefficients_vanish_below_start(params, h), label);
    }
    tally(genfun, genfun_check(r, n_max), "r=" + std::to_string(r) + " n_max=" + std::to_string(n_max));
  }
  return {{cross, degree, lowest, closure, ode, genfun, symmetry, at_zero, vanishing}};
}

void SweepSpec::validate() const {
  if (samples < 2) throw UsageError("samples must be >= 2");
  if (kind == Kind::Circle && !(radius > 0.0)) throw UsageError("circle radius must be > 0");
  if (methods.empty()) throw UsageError("at least one method is required");
  static const std::set<std::string> known{"exact", "outer", "inner", "auto"};
  std::set<std::string> seen;
  for (const auto& m : methods) {
    if (!known.count(m)) throw UsageError("unknown method '" + m + "'");
    if (!seen.insert(m).second) throw UsageError("method '" + m + "' given twice");
  }
}

std::vector<std::complex<double>> SweepSpec::points() const {
  std::vector<std::complex<double>> out;
  out.reserve(samples);
  for (int k = 0; k < samples; ++k) {
    const double u = static_cast<double>(k) / (samples - 1);
    if (kind == Kind::Segment)
      out.push_back(k == samples - 1 ? end : start + (end - start) * u);
    else
      out.push_back(std::polar(radius, angle_start + (angle_end - angle_start) * u));
  }
  return out;
}

std::string cmd_compare(const AsymptoticParams& params, int n, const SweepSpec& sweep, int precision_bits) {
  sweep.validate();
  params.validate();
  if (n < 0) throw UsageError("n must be >= 0");
  if (precision_bits < 53) throw UsageError("precision-bits must be >= 53");
  const FamilyParams family(params.r, n);
  const IntPoly poly = build_diffdiff(family);
  std::string out = "x_re,x_im,method,log_mag,arg,ratio_log,ratio_arg,status\n";
  for (const auto& x : sweep.points()) {
    Evaluated exact;
    exact.value = eval_log_complex(poly, x, precision_bits);
    for (const auto& method : sweep.methods) {
      if (method == "exact") {
        Evaluated shown = exact;
        if (exact.value.is_zero) shown.status = "exact-zero";
        out += join_row(x, method, &shown, exact.value, false);
        continue;
      }
      std::string label = method;
      bool outer = method == "outer";
      bool allowed = outer ? in_outer_region(params, x, n) : in_inner_region(params, x, n);
      if (method == "auto") {
        outer = in_outer_region(params, x, n);
        allowed = outer || in_inner_region(params, x, n);
        if (allowed) label = outer ? "auto:outer" : "auto:inner";
      }
      Evaluated e;
      if (allowed) e = approximate(params, x, n, outer);
      else e.status = "skipped: caustic-guard";
      out += join_row(x, label, &e, exact.value, true);
    }
  }
  return out;
}

std::string cmd_roots(int r, int n, double tol, const std::string& format) {
  if (format != "json" && format != "csv") throw UsageError("unknown format '" + format + "'");
  if (n < 1) throw UsageError("roots needs n >= 1");
  if (!(tol > 0.0)) throw UsageError("tol must be > 0");
  const RootSet roots = all_roots(FamilyParams(r, n), tol);
  if (format == "csv") return roots_to_csv(roots);
  return roots_to_json(roots).dump(2) + '\n';
}

RaysOutput cmd_rays(int r, double s_max, double t_max, int steps) {
  if (!(s_max > 0.0) || !(t_max > 0.0)) throw UsageError("s-max and t-max must be > 0");
  if (steps < 1) throw UsageError("steps must be >= 1");
  const AsymptoticParams params(r);
  std::vector<double> s_values, t_values;
  for (int k = 1; k <= steps; ++k) s_values.push_back(s_max * k / steps);
  for (int j = 0; j <= steps; ++j) t_values.push_back(t_max * j / steps);
  RaysOutput out;
  out.rays_csv = "s,t,x,n,p,q,jacobian\n";
  for (const auto& pt : ray_grid(params, s_values, t_values)) {
    out.rays_csv += format_number(pt.s) + ',' + format_number(pt.t) + ',' + format_number(pt.x) + ',' +
                    format_number(pt.n) + ',' + format_number(pt.p) + ',' + format_number(pt.q) + ',' +
                    format_number(pt.jacobian) + '\n';
  }
  out.caustic_csv = "s,t,x,n,xc\n";
  for (double s : s_values) {
    const RayPoint pt = ray_point(r, s, s / (r - 1));
    out.caustic_csv += format_number(pt.s) + ',' + format_number(pt.t) + ',' + format_number(pt.x) + ',' +
                       format_number(pt.n) + ',' + format_number(caustic_radius(params, pt.n)) + '\n';
  }
  return out;
}

}  // namespace ghp::cli

#include "ghp/asymptotic.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ghp/errors.hpp"

namespace ghp {
namespace {

cdouble ipow(cdouble base, int e) {
  cdouble result = 1.0;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

double binom(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// x^r - (x - t)^r = sum_{j=1}^r C(r,j) (-1)^{j+1} x^{r-j} t^j
cdouble power_difference(int r, cdouble x, cdouble t) {
  cdouble sum = 0.0;
  cdouble tj = 1.0;
  for (int j = 1; j <= r; ++j) {
    tj *= t;
    const double c = (j % 2 ? 1.0 : -1.0) * binom(r, j);
    sum += c * ipow(x, r - j) * tj;
  }
  return sum;
}

cdouble implicit_eq(int r, cdouble x, double n, cdouble t) {
  return static_cast<double>(r) * ipow(x - t, r - 1) * t - n;
}

TBranch refine(const AsymptoticParams& params, TBranch branch, cdouble x, double n) {
  const int r = params.r;
  branch.residual = branch_residual(r, x, n, branch.value);
  if (!params.newton_refine) return branch;
  for (int it = 0; it < params.newton_max_iter && branch.residual > params.newton_tol; ++it) {
    const cdouble t = branch.value;
    const cdouble derivative = static_cast<double>(r) * ipow(x - t, r - 2) * (x - static_cast<double>(r) * t);
    if (derivative == 0.0) break;
    branch.value = t - implicit_eq(r, x, n, t) / derivative;
    branch.residual = branch_residual(r, x, n, branch.value);
  }
  if (!(branch.residual <= params.newton_tol))
    throw ConvergenceError("Newton refinement of t(x, n) stalled at residual " +
                           std::to_string(branch.residual));
  return branch;
}

void require_outer(const AsymptoticParams& params, cdouble x, double n) {
  if (!in_outer_region(params, x, n))
    throw DomainError("outer approximation needs |x| > " +
                      std::to_string(caustic_radius(params, n) / (1.0 - params.caustic_guard)) +
                      ", got |x| = " + std::to_string(std::abs(x)));
}

void require_inner(const AsymptoticParams& params, cdouble x, double n) {
  if (!(n > 0.0)) throw DomainError("inner approximation needs n > 0");
  if (!in_inner_region(params, x, n))
    throw DomainError("inner approximation needs |x| < " +
                      std::to_string((1.0 - params.caustic_guard) * caustic_radius(params, n)) +
                      ", got |x| = " + std::to_string(std::abs(x)));
}

}  // namespace

AsymptoticParams::AsymptoticParams(int order) : r(order) { validate(); }

void AsymptoticParams::validate() const {
  if (r < 2) throw std::invalid_argument("order r must be >= 2");
  if (!(series_tol > 0.0)) throw std::invalid_argument("series_tol must be > 0");
  if (max_terms < 1) throw std::invalid_argument("max_terms must be >= 1");
  if (!(newton_tol > 0.0)) throw std::invalid_argument("newton_tol must be > 0");
  if (newton_max_iter < 0) throw std::invalid_argument("newton_max_iter must be >= 0");
  if (!(caustic_guard > 0.0 && caustic_guard < 1.0))
    throw std::invalid_argument("caustic_guard must lie in (0, 1)");
  if (!(caustic_epsilon >= 0.0)) throw std::invalid_argument("caustic_epsilon must be >= 0");
}

bool in_outer_region(const AsymptoticParams& params, cdouble x, double n) {
  return std::abs(x) > caustic_radius(params, n) / (1.0 - params.caustic_guard);
}

bool in_inner_region(const AsymptoticParams& params, cdouble x, double n) {
  return n > 0.0 && std::abs(x) < (1.0 - params.caustic_guard) * caustic_radius(params, n);
}

double branch_residual(int r, cdouble x, double n, cdouble t) {
  return std::abs(implicit_eq(r, x, n, t)) / std::max(n, 1.0);
}

TBranch t_outer(const AsymptoticParams& params, cdouble x, double n) {
  params.validate();
  if (n < 0.0) throw DomainError("t_outer: n must be >= 0");
  if (n == 0.0) return {BranchKind::Outer, 0, 0.0, 0.0};
  require_outer(params, x, n);
  const cdouble z = n / (static_cast<double>(params.r) * ipow(x, params.r));
  const cdouble seed = params.lambda() * x * (1.0 - rho(params, z));
  return refine(params, {BranchKind::Outer, 0, seed, 0.0}, x, n);
}

cdouble tau(const AsymptoticParams& params, double n, int l) {
  const int r = params.r;
  if (l < 1 || l > r)
    throw std::out_of_range("tau: branch index l=" + std::to_string(l) + " outside [1, " +
                            std::to_string(r) + "]");
  if (n < 0.0) throw DomainError("tau: n must be >= 0");
  const double magnitude = std::pow(n / r, 1.0 / r);
  // lambda (2l+1) pi = k pi / r with k = (r-1)(2l+1) reduced into (-r, r].
  int k = ((r - 1) * (2 * l + 1)) % (2 * r);
  if (k > r) k -= 2 * r;
  if (k == 0) return {magnitude, 0.0};
  if (k == r) return {-magnitude, 0.0};
  const double angle = k * std::numbers::pi / r;
  return {magnitude * std::cos(angle), magnitude * std::sin(angle)};
}

TBranch t_inner(const AsymptoticParams& params, cdouble x, double n, int l) {
  params.validate();
  require_inner(params, x, n);
  const cdouble tl = tau(params, n, l);
  const cdouble seed = tl + params.lambda() * x * mu(params, x / tl);
  return refine(params, {BranchKind::Inner, l, seed, 0.0}, x, n);
}

cdouble phase_f(const AsymptoticParams& params, cdouble x, double n, cdouble t) {
  const cdouble poly_part = power_difference(params.r, x, t);
  if (n == 0.0) return poly_part;
  if (t == 0.0) throw DomainError("phase_f: t = 0 with n > 0");
  return poly_part + n * (std::log(n / t) - 1.0);
}

cdouble amplitude_g(const AsymptoticParams& params, cdouble x, cdouble t) {
  const cdouble denom = x - static_cast<double>(params.r) * t;
  if (std::abs(denom) <= params.caustic_epsilon * std::max(1.0, std::abs(x)))
    throw CausticSingularity("amplitude_g: x = r t (on the caustic)");
  return 0.5 * std::log((x - t) / denom);
}

LogComplex h_outer(const AsymptoticParams& params, cdouble x, int n) {
  if (n < 1) throw DomainError("h_outer needs n >= 1");
  const TBranch b = t_outer(params, x, n);
  return LogComplex::exp_of(phase_f(params, x, n, b.value) + amplitude_g(params, x, b.value));
}

LogComplex h_outer_closed_form(const AsymptoticParams& params, cdouble x, int n) {
  if (n < 1) throw DomainError("h_outer needs n >= 1");
  params.validate();
  require_outer(params, x, n);
  const int r = params.r;
  const double lam = params.lambda();
  const double nd = n;
  const cdouble a = 1.0 - rho(params, nd / (static_cast<double>(r) * ipow(x, r)));
  // x^r {1 - [1 - lambda a]^r} == power_difference(r, x, lambda x a)
  const cdouble exponent_part = power_difference(r, x, lam * x * a) - nd;
  const cdouble power_part = nd * std::log(nd / (lam * x * a));
  const cdouble amplitude = 0.5 * std::log((1.0 - lam * a) / (1.0 - (r - 1.0) * a));
  return LogComplex::exp_of(exponent_part + power_part + amplitude);
}

std::vector<cdouble> inner_contributions(const AsymptoticParams& params, cdouble x, int n) {
  if (n < 1) throw DomainError("h_inner needs n >= 1");
  std::vector<cdouble> logs;
  logs.reserve(static_cast<std::size_t>(params.r));
  for (int l = 1; l <= params.r; ++l) {
    const TBranch b = t_inner(params, x, n, l);
    logs.push_back(phase_f(params, x, n, b.value) + amplitude_g(params, x, b.value));
  }
  return logs;
}

LogComplex h_inner(const AsymptoticParams& params, cdouble x, int n) {
  const auto logs = inner_contributions(params, x, n);
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& lg : logs) top = std::max(top, lg.real());
  cdouble sum = 0.0;
  for (const auto& lg : logs) sum += std::exp(lg - top);
  if (sum == 0.0) return LogComplex::zero();
  return LogComplex::polar(top + std::log(std::abs(sum)), std::arg(sum));
}

double eikonal_residual(const AsymptoticParams& params, double x, double n, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("eikonal_residual: step h must be > 0");
  auto f = [&](double xx, double nn) {
    const TBranch b = t_outer(params, xx, nn);
    return phase_f(params, xx, nn, b.value).real();
  };
  const double df_dn = (f(x, n + h) - f(x, n - h)) / (2.0 * h);
  const double df_dx = (f(x + h, n) - f(x - h, n)) / (2.0 * h);
  return std::abs(std::exp(df_dn) + df_dx - params.r * std::pow(x, params.r - 1));
}

RayPoint ray_point(int r, double s, double t) {
  if (r < 2) throw std::invalid_argument("ray_point: r must be >= 2");
  if (s < 0.0 || t < 0.0) throw std::invalid_argument("ray_point: s and t must be >= 0");
  const double s_rm1 = std::pow(s, r - 1);
  RayPoint pt{};
  pt.s = s;
  pt.t = t;
  pt.x = t + s;
  pt.n = r * s_rm1 * t;
  pt.p = r * (std::pow(t + s, r - 1) - s_rm1);
  pt.q = std::log(r * s_rm1);
  pt.jacobian = r * std::pow(s, r - 2) * ((r - 1) * t - s);
  return pt;
}

std::vector<RayPoint> ray_grid(const AsymptoticParams& params, std::span<const double> s_values,
                               std::span<const double> t_values) {
  params.validate();
  std::vector<RayPoint> out;
  out.reserve(s_values.size() * t_values.size());
  for (double s : s_values)
    for (double t : t_values) out.push_back(ray_point(params.r, s, t));
  return out;
}

}  // namespace ghp

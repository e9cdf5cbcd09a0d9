#pragma once

#include <complex>
#include <span>
#include <vector>

#include "ghp/log_complex.hpp"

namespace ghp {

using cdouble = std::complex<double>;

/// Order and numerical knobs of the ray-method approximations.
struct AsymptoticParams {
  explicit AsymptoticParams(int order);

  int r;
  double series_tol = 1e-14;
  int max_terms = 10000;
  double newton_tol = 1e-13;
  int newton_max_iter = 50;
  bool newton_refine = true;
  /// No approximation is attempted for (1-g) X_c < |x| < X_c / (1-g).
  double caustic_guard = 0.1;
  /// amplitude_g refuses |x - r t| <= caustic_epsilon * max(1, |x|).
  double caustic_epsilon = 1e-12;

  /// (r-1)/r, in [1/2, 1).
  double lambda() const { return (r - 1.0) / r; }
  /// Throws std::invalid_argument on out-of-range fields.
  void validate() const;
};

/// One point of the characteristic flow launched from x = s at n = 0.
struct RayPoint {
  double s;
  double t;
  double x;         // t + s
  double n;         // r s^{r-1} t
  double p;         // r[(t+s)^{r-1} - s^{r-1}]
  double q;         // ln(r s^{r-1}); -inf at s = 0
  double jacobian;  // r s^{r-2} [(r-1)t - s]
};

enum class BranchKind { Outer, Inner };

/// A root t(x, n) of r (x-t)^{r-1} t = n.
struct TBranch {
  BranchKind kind;
  int index;  // l in 1..r for Inner, 0 for Outer
  cdouble value;
  /// |r (x-t)^{r-1} t - n| / max(n, 1)
  double residual;
};

struct SeriesValue {
  cdouble value;
  int terms;
  double tail_bound;  // estimated |remainder|
};

// Caustic and series radii.

/// X_c(n) = lambda^{-lambda} n^{1-lambda}.
double caustic_radius(const AsymptoticParams& params, double n);
/// |x| > X_c(n) / (1 - caustic_guard)
bool in_outer_region(const AsymptoticParams& params, cdouble x, double n);
/// n > 0 and |x| < (1 - caustic_guard) X_c(n)
bool in_inner_region(const AsymptoticParams& params, cdouble x, double n);
/// lambda^r / (r-1)
double rho_radius(const AsymptoticParams& params);
/// lambda^{-lambda} (1-lambda)^{lambda-1}
double mu_radius(const AsymptoticParams& params);

/// rho(z) = sum_k C(rk, k) z^k / (1 - rk).
///
/// Summation stops once the geometric tail estimate (ratio bounded by the
/// larger of the observed term ratio and |z|/radius) falls below
/// series_tol * |partial sum|. DomainError beyond (1 - caustic_guard) times
/// the radius, ConvergenceError when max_terms is exhausted first.
SeriesValue rho_series(const AsymptoticParams& params, cdouble z);
cdouble rho(const AsymptoticParams& params, cdouble z);

/// mu(z) = sum_k C(k/r, k) z^k / (k + 1); same stopping rule and errors.
SeriesValue mu_series(const AsymptoticParams& params, cdouble z);
cdouble mu(const AsymptoticParams& params, cdouble z);

/// Residual of the implicit equation for t, scaled by max(n, 1).
double branch_residual(int r, cdouble x, double n, cdouble t);

/// Outer branch: series seed lambda x [1 - rho(n / (r x^r))], then Newton.
/// Requires |x| > X_c(n) / (1 - caustic_guard).
TBranch t_outer(const AsymptoticParams& params, cdouble x, double n);

/// tau_l(n) = [n(1-lambda)]^{1-lambda} exp[lambda (2l+1) pi i], 1 <= l <= r.
/// The angle is reduced to (-pi, pi] in exact integer arithmetic, so the
/// conjugate pairs among the tau_l are exact conjugates in floating point.
cdouble tau(const AsymptoticParams& params, double n, int l);

/// Inner branch l: tau_l + lambda x mu(x / tau_l), then Newton.
/// Requires n > 0 and |x| < (1 - caustic_guard) X_c(n).
TBranch t_inner(const AsymptoticParams& params, cdouble x, double n, int l);

/// f = x^r - (x-t)^r + n[ln(n/t) - 1], principal log. The polynomial part
/// is expanded in t so large |x| does not cancel.
cdouble phase_f(const AsymptoticParams& params, cdouble x, double n, cdouble t);

/// g = (1/2) ln[(x-t)/(x-rt)], principal log; CausticSingularity at x = rt.
cdouble amplitude_g(const AsymptoticParams& params, cdouble x, cdouble t);

/// exp(f + g) on the outer branch.
LogComplex h_outer(const AsymptoticParams& params, cdouble x, int n);
/// The same approximation written directly in terms of the rho series
/// (no Newton step); agrees with h_outer up to series_tol.
LogComplex h_outer_closed_form(const AsymptoticParams& params, cdouble x, int n);

/// ln of each branch contribution f + g, l = 1..r.
std::vector<cdouble> inner_contributions(const AsymptoticParams& params, cdouble x, int n);
/// Sum over all r inner branches, accumulated relative to the largest term.
LogComplex h_inner(const AsymptoticParams& params, cdouble x, int n);

/// |exp(df/dn) + df/dx - r x^{r-1}| with central differences of step h for
/// the partials of f along the outer branch. Vanishes as O(h^2).
double eikonal_residual(const AsymptoticParams& params, double x, double n, double h);

RayPoint ray_point(int r, double s, double t);
/// s-major grid of ray_point(r, s, t); s, t >= 0.
std::vector<RayPoint> ray_grid(const AsymptoticParams& params, std::span<const double> s_values,
                               std::span<const double> t_values);

}  // namespace ghp

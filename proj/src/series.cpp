#include <cmath>
#include <limits>
#include <string>

#include "ghp/asymptotic.hpp"
#include "ghp/errors.hpp"

namespace ghp {
namespace {

// Sums c_0 + c_1 z + ... with coefficients drawn from next_coeff(k).
template <typename NextCoeff>
SeriesValue sum_series(const AsymptoticParams& params, cdouble z, double radius, const char* name,
                       NextCoeff next_coeff) {
  params.validate();
  const double az = std::abs(z);
  if (!(az <= (1.0 - params.caustic_guard) * radius))
    throw DomainError(std::string(name) + ": |z| = " + std::to_string(az) +
                      " outside guarded radius " +
                      std::to_string((1.0 - params.caustic_guard) * radius));
  if (z == 0.0) return {next_coeff(0), 1, 0.0};

  const double q_limit = az / radius;
  cdouble sum = 0.0;
  cdouble zpow = 1.0;
  double last_mag = 0.0;
  int last_k = -1;
  for (int k = 0; k < params.max_terms; ++k) {
    const cdouble term = next_coeff(k) * zpow;
    sum += term;
    zpow *= z;
    const double mag = std::abs(term);
    if (mag == 0.0) continue;
    if (last_k >= 0) {
      const double observed = std::pow(mag / last_mag, 1.0 / (k - last_k));
      const double q = std::max(observed, q_limit);
      if (q < 1.0) {
        const double tail = mag * q / (1.0 - q);
        const double scale = std::max(std::abs(sum), std::numeric_limits<double>::min());
        if (tail <= params.series_tol * scale) return {sum, k + 1, tail};
      }
    }
    last_mag = mag;
    last_k = k;
  }
  throw ConvergenceError(std::string(name) + ": no convergence within " +
                         std::to_string(params.max_terms) + " terms at |z| = " + std::to_string(az));
}

}  // namespace

double caustic_radius(const AsymptoticParams& params, double n) {
  if (n < 0.0) throw DomainError("caustic_radius: n must be >= 0");
  if (n == 0.0) return 0.0;
  const double lam = params.lambda();
  return std::pow(lam, -lam) * std::pow(n, 1.0 - lam);
}

double rho_radius(const AsymptoticParams& params) {
  return std::pow(params.lambda(), params.r) / (params.r - 1);
}

double mu_radius(const AsymptoticParams& params) {
  const double lam = params.lambda();
  return std::pow(lam, -lam) * std::pow(1.0 - lam, lam - 1.0);
}

SeriesValue rho_series(const AsymptoticParams& params, cdouble z) {
  const int r = params.r;
  double c = 1.0;  // C(rk, k) / (1 - rk) at the current k
  int k_prev = -1;
  return sum_series(params, z, rho_radius(params), "rho", [&](int k) {
    if (k == 0) {
      k_prev = 0;
      return c;
    }
    // advance from k-1 to k
    const double km = k_prev;
    double ratio = 1.0;
    for (int i = 1; i <= r; ++i) ratio *= r * km + i;
    ratio /= (km + 1.0);
    for (int i = 1; i <= r - 1; ++i) ratio /= (r - 1) * km + i;
    ratio *= (1.0 - r * km) / (1.0 - r * (km + 1.0));
    c *= ratio;
    k_prev = k;
    return c;
  });
}

cdouble rho(const AsymptoticParams& params, cdouble z) { return rho_series(params, z).value; }

SeriesValue mu_series(const AsymptoticParams& params, cdouble z) {
  const double r = params.r;
  return sum_series(params, z, mu_radius(params), "mu", [r](int k) {
    // C(k/r, k) / (k + 1); the product hits an exact zero when r | k, k >= r.
    const double top = k / r;
    double c = 1.0;
    for (int j = 0; j < k; ++j) c *= (top - j) / (j + 1);
    return c / (k + 1);
  });
}

cdouble mu(const AsymptoticParams& params, cdouble z) { return mu_series(params, z).value; }

}  // namespace ghp

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "ghp/asymptotic.hpp"
#include "ghp/errors.hpp"
#include "ghp/exact_eval.hpp"
#include "oracles.hpp"

using namespace ghp;
using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;

namespace {

double outer_ratio_error(int r, int n, double x) {
  const AsymptoticParams p(r);
  const LogComplex approx = h_outer(p, x, n);
  const LogComplex exact = eval_log_complex(build_diffdiff({r, n}), {x, 0.0}, 256);
  const LogComplex ratio = approx / exact;
  return std::abs(ratio.to_complex() - 1.0);
}

}  // namespace

TEST_CASE("t_outer examples") {
  const AsymptoticParams p2(2);
  const TBranch b = t_outer(p2, 2.5, 2.0);
  CHECK(b.kind == BranchKind::Outer);
  CHECK(std::abs(b.value - 0.5) < 1e-14);
  CHECK(t_outer(p2, 2.5, 0.0).value == 0.0);
  CHECK(t_outer(AsymptoticParams(4), cd(0.3, 1.0), 0.0).value == 0.0);
  CHECK_THROWS_AS(t_outer(p2, 0.5, 2.0), DomainError);
}

TEST_CASE("t_outer seed without Newton") {
  AsymptoticParams p(2);
  p.newton_refine = false;
  p.newton_tol = 1e-10;
  CHECK(std::abs(t_outer(p, 2.5, 2.0).value - 0.5) < 1e-13);
}

TEST_CASE("t_outer rotation covariance") {
  for (int r = 2; r <= 6; ++r) {
    const AsymptoticParams p(r);
    const double n = 3.0;
    const cd x = std::polar(1.5 * caustic_radius(p, n), 0.2);
    const cd t = t_outer(p, x, n).value;
    for (int j = 1; j < r; ++j) {
      const cd w = std::polar(1.0, 2.0 * pi * j / r);
      CHECK(std::abs(t_outer(p, w * x, n).value - w * t) < 1e-12 * std::abs(t));
    }
  }
}

TEST_CASE("tau examples") {
  const AsymptoticParams p2(2);
  CHECK(std::abs(tau(p2, 2.0, 2) - cd(0.0, 1.0)) < 1e-15);
  for (int l = 1; l <= 5; ++l) CHECK(tau(AsymptoticParams(5), 0.0, l) == 0.0);
  CHECK_THROWS_AS(tau(p2, 1.0, 0), std::out_of_range);
  CHECK_THROWS_AS(tau(p2, 1.0, 3), std::out_of_range);
}

TEST_CASE("tau multiset closed under conjugation with expected modulus") {
  for (int r = 2; r <= 7; ++r) {
    const AsymptoticParams p(r);
    const double n = 3.7, lam = p.lambda();
    std::vector<cd> taus;
    for (int l = 1; l <= r; ++l) {
      taus.push_back(tau(p, n, l));
      CHECK(std::abs(taus.back()) == doctest::Approx(std::pow(n * (1 - lam), 1 - lam)).epsilon(1e-14));
    }
    for (const cd t : taus)
      CHECK(std::count(taus.begin(), taus.end(), std::conj(t)) >= 1);
  }
}

TEST_CASE("t_inner examples") {
  for (int r = 2; r <= 6; ++r) {
    const AsymptoticParams p(r);
    for (int l = 1; l <= r; ++l) {
      const TBranch b = t_inner(p, 0.0, 4.0, l);
      CHECK(b.kind == BranchKind::Inner);
      CHECK(b.index == l);
      CHECK(std::abs(b.value - tau(p, 4.0, l)) < 1e-13);
    }
  }
  const AsymptoticParams p2(2);
  const TBranch b1 = t_inner(p2, 0.3, 4.0, 1), b2 = t_inner(p2, 0.3, 4.0, 2);
  CHECK(b1.residual <= p2.newton_tol);
  CHECK(b2.value == std::conj(b1.value));
  CHECK_THROWS_AS(t_inner(p2, 5.0, 4.0, 1), DomainError);
  CHECK_THROWS_AS(t_inner(p2, 0.0, 0.0, 1), DomainError);
}

TEST_CASE("branch residual property on random samples") {
  auto gen = oracle::rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> rdist(2, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const AsymptoticParams p(rdist(gen));
    const double n = 0.5 + 40.0 * u(gen);
    const double xc = caustic_radius(p, n);
    const double angle = pi / p.r * (2.0 * u(gen) - 1.0);
    const cd x_out = std::polar(xc / 0.9 * (1.001 + 3.0 * u(gen)), angle);
    CHECK(t_outer(p, x_out, n).residual <= p.newton_tol);
    const cd x_in = std::polar(0.899 * xc * u(gen), angle);
    for (int l = 1; l <= p.r; ++l) CHECK(t_inner(p, x_in, n, l).residual <= p.newton_tol);
  }
}

TEST_CASE("phase_f examples") {
  const AsymptoticParams p2(2);
  CHECK(phase_f(p2, 1.7, 0.0, 0.0) == 0.0);
  const cd f = phase_f(p2, 2.5, 2.0, 0.5);
  CHECK(f.real() == doctest::Approx(2.25 + 2.0 * (std::log(4.0) - 1.0)).epsilon(1e-14));
  CHECK(f.imag() == 0.0);
  CHECK(phase_f(AsymptoticParams(5), 3.0, 2.0, 0.7).imag() == 0.0);
  CHECK_THROWS_AS(phase_f(p2, 2.0, 1.0, 0.0), DomainError);
}

TEST_CASE("amplitude_g examples") {
  const AsymptoticParams p2(2);
  CHECK(amplitude_g(p2, 1.3, 0.0) == 0.0);
  CHECK(amplitude_g(p2, 2.5, 0.5).real() == doctest::Approx(0.5 * std::log(4.0 / 3.0)).epsilon(1e-14));
  CHECK_THROWS_AS(amplitude_g(p2, 2.0, 1.0), CausticSingularity);
  CHECK_THROWS_AS(amplitude_g(AsymptoticParams(5), 5.0, 1.0), CausticSingularity);
}

TEST_CASE("h_outer near 1 for r = 2, n = 10, x = 5") {
  CHECK(outer_ratio_error(2, 10, 5.0) < 0.05);
}

TEST_CASE("h_outer for r = 5, n = 5 degrades toward the caustic") {
  const double xc = caustic_radius(AsymptoticParams(5), 5);
  double previous = outer_ratio_error(5, 5, 1.12 * xc);
  for (double x = 2.0; x <= 7.0; x += 0.5) {
    const double err = outer_ratio_error(5, 5, x);
    CHECK(err < previous);
    previous = err;
  }
  CHECK(previous < 1e-6);
}

TEST_CASE("both outer forms agree") {
  for (int r = 2; r <= 6; ++r) {
    const AsymptoticParams p(r);
    for (int n : {1, 5, 20}) {
      const double xc = caustic_radius(p, n);
      for (double scale : {1.2, 2.0, 5.0}) {
        const cd x = std::polar(scale * xc, 0.3 / r);
        const LogComplex a = h_outer(p, x, n), b = h_outer_closed_form(p, x, n);
        CHECK(a.log_magnitude == doctest::Approx(b.log_magnitude).epsilon(1e-12));
        CHECK(std::abs(normalize_angle(a.argument - b.argument)) < 1e-10);
      }
    }
  }
}

TEST_CASE("h_outer rotation covariance") {
  for (int r = 2; r <= 5; ++r) {
    const AsymptoticParams p(r);
    const int n = 7;
    const cd x = std::polar(1.5 * caustic_radius(p, n), 0.1);
    const LogComplex base = h_outer(p, x, n);
    for (int j = 1; j < r; ++j) {
      const double angle = 2.0 * pi * j / r;
      const LogComplex rotated = h_outer(p, std::polar(1.0, angle) * x, n);
      CHECK(rotated.log_magnitude == doctest::Approx(base.log_magnitude).epsilon(1e-13));
      CHECK(std::abs(normalize_angle(rotated.argument + n * angle - base.argument)) < 1e-9);
    }
  }
}

TEST_CASE("h_inner is real on the real axis for r = 5, n = 5") {
  AsymptoticParams p(5);
  p.caustic_guard = 0.04;
  const double xc = caustic_radius(p, 5);
  for (int k = 0; k <= 200; ++k) {
    const double x = 0.1 + (0.95 * xc - 0.1) * k / 200.0;
    const LogComplex h = h_inner(p, x, 5);
    REQUIRE_FALSE(h.is_zero);
    CHECK(std::abs(std::sin(h.argument)) <= 1e-8);
  }
}

TEST_CASE("h_inner sign changes follow the exact zeros of H_5^5") {
  AsymptoticParams p(5);
  p.caustic_guard = 0.04;
  const double hi = 0.95 * caustic_radius(p, 5);
  const IntPoly h = build_diffdiff({5, 5});
  auto exact = [&h](double x) { return evaluate<double>(h, x); };
  auto approx = [&p](double x) { return std::cos(h_inner(p, x, 5).argument); };
  const auto exact_roots = oracle::bisection_roots(exact, 0.1, hi, 400);
  const auto approx_roots = oracle::bisection_roots(approx, 0.1, hi, 400, 1e-10);
  REQUIRE(exact_roots.size() == 4);
  REQUIRE(approx_roots.size() == exact_roots.size());
  for (std::size_t i = 0; i < exact_roots.size(); ++i) CHECK(std::abs(approx_roots[i] - exact_roots[i]) < 0.05);
}

TEST_CASE("h_inner vanishes at x = 0 for odd n when r = 2") {
  const AsymptoticParams p(2);
  for (int n : {3, 9, 21, 31}) {
    const LogComplex h = h_inner(p, 0.0, n);
    double top = -1e300;
    for (const cd lg : inner_contributions(p, 0.0, n)) top = std::max(top, lg.real());
    CHECK((h.is_zero || h.log_magnitude - top < -30.0));
  }
  for (int n : {4, 10, 20}) {
    // Even n: sign and size of H_n(0) = (-1)^{n/2} n!/(n/2)!
    const LogComplex h = h_inner(p, 0.0, n);
    const double exact = std::lgamma(n + 1.0) - std::lgamma(n / 2 + 1.0);
    CHECK(h.log_magnitude == doctest::Approx(exact).epsilon(0.05));
    CHECK(std::cos(h.argument) * ((n / 2) % 2 ? -1.0 : 1.0) > 0.99);
  }
}

TEST_CASE("eikonal residual analytic point and convergence order") {
  const AsymptoticParams p2(2);
  CHECK(eikonal_residual(p2, 2.5, 2.0, 1e-3) < 1e-5);
  for (int r : {2, 3, 5}) {
    const AsymptoticParams p(r);
    const double n = 6.0, x = 1.6 * caustic_radius(p, n);
    const double e1 = eikonal_residual(p, x, n, 2e-2), e2 = eikonal_residual(p, x, n, 1e-2);
    CHECK(std::log2(e1 / e2) >= 1.8);
  }
  CHECK(eikonal_residual(p2, 2.5, 1e-4, 1e-5) < 1e-6);
}

TEST_CASE("ray points") {
  for (int r = 2; r <= 6; ++r) {
    const RayPoint pt = ray_point(r, 1.7, 0.0);
    CHECK(pt.x == 1.7);
    CHECK(pt.n == 0.0);
    CHECK(pt.jacobian == doctest::Approx(-r * std::pow(1.7, r - 1)));
  }
  const AsymptoticParams p5(5);
  for (double t : {0.1, 0.5, 1.0, 2.5}) {
    const RayPoint pt = ray_point(5, 4.0 * t, t);
    CHECK(pt.jacobian == 0.0);
    CHECK(std::abs(pt.x - caustic_radius(p5, pt.n)) <= 1e-12 * std::max(1.0, pt.x));
  }
  const RayPoint pt = ray_point(2, 1.0, 1.0);
  CHECK(pt.x == 2.0);
  CHECK(pt.n == 2.0);
  CHECK(pt.jacobian == 0.0);
  CHECK(pt.p == doctest::Approx(2.0));
  CHECK(pt.q == doctest::Approx(std::log(2.0)));
  CHECK_THROWS_AS(ray_point(2, -1.0, 0.0), std::invalid_argument);
}

TEST_CASE("ray grid invariants") {
  const AsymptoticParams p(4);
  const std::vector<double> s{0.5, 1.0, 2.0}, t{0.0, 0.25, 1.0};
  const auto grid = ray_grid(p, s, t);
  REQUIRE(grid.size() == 9);
  for (const auto& pt : grid) {
    CHECK(pt.x == doctest::Approx(pt.t + pt.s));
    CHECK(pt.n == doctest::Approx(4 * std::pow(pt.s, 3) * pt.t));
    CHECK(pt.p == doctest::Approx(4 * (std::pow(pt.t + pt.s, 3) - std::pow(pt.s, 3))));
    CHECK(pt.jacobian == doctest::Approx(4 * pt.s * pt.s * (3 * pt.t - pt.s)));
  }
}

TEST_CASE("outer accuracy improves with n") {
  for (int r : {2, 3, 5}) {
    const AsymptoticParams p(r);
    const double e10 = outer_ratio_error(r, 10, 1.5 * caustic_radius(p, 10));
    const double e40 = outer_ratio_error(r, 40, 1.5 * caustic_radius(p, 40));
    CHECK(e40 < e10);
    CHECK(e40 <= 0.05);
  }
}

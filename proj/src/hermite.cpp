#include "ghp/hermite.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace ghp {
namespace {

mpz_class factorial(unsigned long k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

mpz_class binomial(unsigned long top, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), top, k);
  return b;
}

mpq_class ratio(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

IntPoly next_diffdiff(const IntPoly& h, int r) {
  IntPoly next = shifted(h, static_cast<std::size_t>(r - 1), mpz_class(r));
  next -= derivative(h);
  return next;
}

}  // namespace

FamilyParams::FamilyParams(int r, int n) : r_(r), n_(n) {
  if (r < 2) throw std::invalid_argument("order r must be >= 2, got " + std::to_string(r));
  if (n < 0) throw std::invalid_argument("index n must be >= 0, got " + std::to_string(n));
}

std::size_t FamilyParams::degree() const {
  return static_cast<std::size_t>(n_) * static_cast<std::size_t>(r_ - 1);
}

std::size_t FamilyParams::lowest_exponent() const {
  const int ceil_div = (n_ + r_ - 1) / r_;
  return static_cast<std::size_t>(r_ * ceil_div - n_);
}

std::vector<IntPoly> build_diffdiff_sequence(int r, int n_max) {
  FamilyParams check(r, n_max);
  std::vector<IntPoly> seq;
  seq.reserve(static_cast<std::size_t>(n_max) + 1);
  seq.emplace_back(mpz_class(1));
  for (int k = 0; k < n_max; ++k) seq.push_back(next_diffdiff(seq.back(), r));
  return seq;
}

IntPoly build_diffdiff(const FamilyParams& params) {
  IntPoly h(mpz_class(1));
  for (int k = 0; k < params.n(); ++k) h = next_diffdiff(h, params.r());
  return h;
}

mpz_class coefficient(const FamilyParams& params, int k) {
  const int n = params.n();
  const int r = params.r();
  if (k < 0 || k > n)
    throw std::out_of_range("coefficient index k=" + std::to_string(k) + " outside [0, " +
                            std::to_string(n) + "]");
  mpz_class sum = 0;
  for (int j = 0; j <= k; ++j) {
    mpz_class term = binomial(k, j) * binomial(static_cast<unsigned long>(r) * j, n);
    if (j % 2) sum -= term;
    else sum += term;
  }
  // n!/k! is an integer because k <= n.
  mpz_class prefactor = factorial(n) / factorial(k);
  mpz_class c = prefactor * sum;
  return n % 2 ? mpz_class(-c) : c;
}

IntPoly build_explicit(const FamilyParams& params) {
  const int n = params.n();
  const int r = params.r();
  const int k_lo = (n + r - 1) / r;
  IntPoly h;
  for (int k = k_lo; k <= n; ++k) {
    mpz_class c = coefficient(params, k);
    h.add_term(static_cast<std::size_t>(r * k - n), c);
  }
  return h;
}

IntPoly build_recurrence(const FamilyParams& params) {
  const int r = params.r();
  std::vector<IntPoly> h;
  h.reserve(static_cast<std::size_t>(params.n()) + 1);
  h.emplace_back(mpz_class(1));
  for (int m = 0; m < params.n(); ++m) {
    IntPoly next;
    const int k_max = std::min(r - 1, m);
    for (int k = 0; k <= k_max; ++k) {
      mpz_class c = factorial(k) * binomial(m, k) * binomial(r - 1, k) * r;
      if (k % 2) c = -c;
      next += shifted(h[m - k], static_cast<std::size_t>(r - 1 - k), c);
    }
    h.push_back(std::move(next));
  }
  return std::move(h.back());
}

int omega_indicator(int r, int k) {
  if (r < 1 || k < 0) throw std::invalid_argument("omega_indicator needs r >= 1, k >= 0");
  return k % r == 0 ? 1 : 0;
}

mpz_class value_at_zero(const FamilyParams& params) {
  const int r = params.r();
  const int n = params.n();
  if (omega_indicator(r, n) == 0) return 0;
  const int q = n / r;
  mpz_class v = factorial(n) / factorial(q);
  // (-1)^{(r-1)n/r} = (-1)^{(r-1)q}
  return ((r - 1) * q) % 2 ? mpz_class(-v) : v;
}

IntPoly ode_residual(const FamilyParams& params) {
  const int r = params.r();
  const int n = params.n();
  const auto h = build_diffdiff_sequence(r, n + r);
  IntPoly lhs = r % 2 ? IntPoly(-h[n + r]) : h[n + r];
  const mpz_class top = factorial(n + r - 1);
  for (int k = 0; k < r; ++k) {
    mpz_class c = binomial(r - 1, k) * (top / factorial(n + k)) * r;
    if (k % 2) c = -c;
    lhs += shifted(h[n + k], static_cast<std::size_t>(k), c);
  }
  return lhs;
}

bool genfun_check(int r, int n_max) {
  if (n_max < 0) throw std::invalid_argument("genfun_check needs n_max >= 0");
  FamilyParams check(r, n_max);
  // p_j(x): coefficient of t^j in x^r - (x-t)^r, j = 1..r.
  std::vector<RatPoly> p(static_cast<std::size_t>(r) + 1);
  for (int j = 1; j <= r; ++j) {
    mpq_class c(binomial(r, j));
    if (j % 2 == 0) c = -c;
    p[j].add_term(static_cast<std::size_t>(r - j), c);
  }
  // e = exp(P) satisfies e' = P' e in t: m e_m = sum_{j=1}^{m} j p_j e_{m-j}.
  std::vector<RatPoly> e;
  e.emplace_back(mpq_class(1));
  for (int m = 1; m <= n_max; ++m) {
    RatPoly acc;
    for (int j = 1; j <= std::min(m, r); ++j) acc += p[j] * e[m - j] * mpq_class(j);
    acc *= ratio(1, m);
    e.push_back(std::move(acc));
  }
  const auto h = build_diffdiff_sequence(r, n_max);
  for (int m = 0; m <= n_max; ++m) {
    RatPoly expected = convert<mpq_class>(h[m]) * ratio(1, factorial(m));
    if (!(expected == e[m])) return false;
  }
  return true;
}

bool symmetry_check(const IntPoly& poly, const FamilyParams& params) {
  const std::size_t r = static_cast<std::size_t>(params.r());
  const std::size_t residue = (r - static_cast<std::size_t>(params.n()) % r) % r;
  for (const auto& [e, c] : poly.terms())
    if (e % r != residue) return false;
  return true;
}

bool symmetry_check(const FamilyParams& params) {
  return symmetry_check(build_diffdiff(params), params);
}

bool diffdiff_closure_check(const FamilyParams& params) {
  const auto h = build_diffdiff_sequence(params.r(), params.n() + 1);
  const IntPoly& hn = h[params.n()];
  IntPoly lhs = h[params.n() + 1] + derivative(hn);
  IntPoly rhs = shifted(hn, static_cast<std::size_t>(params.r() - 1), mpz_class(params.r()));
  return lhs == rhs;
}

}  // namespace ghp

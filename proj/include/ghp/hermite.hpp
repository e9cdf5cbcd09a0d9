#pragma once

#include <gmpxx.h>

#include <vector>

#include "ghp/sparse_poly.hpp"

namespace ghp {

using IntPoly = SparsePoly<mpz_class>;
using RatPoly = SparsePoly<mpq_class>;

/// Order r >= 2 and index n >= 0 of H_n^r(x) = (-1)^n e^{x^r} d^n/dx^n e^{-x^r}.
class FamilyParams {
 public:
  FamilyParams(int r, int n);
  int r() const { return r_; }
  int n() const { return n_; }
  /// n(r-1)
  std::size_t degree() const;
  /// r*ceil(n/r) - n, the lowest exponent and the multiplicity of the root at 0.
  std::size_t lowest_exponent() const;

 private:
  int r_;
  int n_;
};

// Three independent constructions; all must agree term by term.

/// Iterates H_{k+1} = r x^{r-1} H_k - H_k' from H_0 = 1.
IntPoly build_diffdiff(const FamilyParams& params);
/// H_0..H_n by the same iteration, for sweeps over n.
std::vector<IntPoly> build_diffdiff_sequence(int r, int n_max);
/// Sum of C_k^n(r) x^{rk-n} over ceil(n/r) <= k <= n.
IntPoly build_explicit(const FamilyParams& params);
/// r-term recurrence in n, with H_j = 0 for j < 0.
IntPoly build_recurrence(const FamilyParams& params);

/// C_k^n(r) = ((-1)^n n!/k!) sum_j (-1)^j C(k,j) C(rj,n). Zero when rk < n.
/// Throws std::out_of_range unless 0 <= k <= n.
mpz_class coefficient(const FamilyParams& params, int k);

/// H_n^r(0) from its closed form; 0 unless r | n.
mpz_class value_at_zero(const FamilyParams& params);

/// 1 if r divides k, else 0.
int omega_indicator(int r, int k);

/// Left-hand side of the order-r ODE for exp(-x^r) H_n^r, reduced to a
/// polynomial identity. Zero for every valid (r, n).
IntPoly ode_residual(const FamilyParams& params);

/// Expands exp[x^r - (x-t)^r] through t^{n_max} with exact rational polynomial
/// coefficients and compares each against H_k^r / k!.
bool genfun_check(int r, int n_max);

/// True iff every exponent e of poly satisfies e = -n (mod r), i.e.
/// H(x) = w^n H(wx) for every r-th root of unity w.
bool symmetry_check(const IntPoly& poly, const FamilyParams& params);
bool symmetry_check(const FamilyParams& params);

/// H_{n+1} + H_n' == r x^{r-1} H_n, checked exactly on freshly built polys.
bool diffdiff_closure_check(const FamilyParams& params);

}  // namespace ghp

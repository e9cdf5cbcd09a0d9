#pragma once

#include <gmpxx.h>

#include <complex>
#include <json.hpp>
#include <string>
#include <vector>

#include "ghp/hermite.hpp"

namespace ghp {

/// H_n^r(x) = x^m Q(x^r) exactly.
struct Decomposition {
  int r = 2;
  int n = 0;
  std::size_t m = 0;
  std::vector<mpz_class> q_poly;  // q_poly[i] multiplies z^i
};

/// Splits a polynomial built for params. MalformedPolynomial if poly is zero,
/// has an exponent off the residue class -n (mod r), or its lowest exponent
/// is not r*ceil(n/r) - n.
Decomposition decompose(const IntPoly& poly, const FamilyParams& params);

/// Root of Q in (lo, hi], or exactly lo == hi when the root is rational and
/// was hit by a bisection point.
struct RootInterval {
  mpq_class lo;
  mpq_class hi;
  int multiplicity;
};

/// Certified isolation of every positive real root of Q.
///
/// Q is split into square-free factors (Yun); each factor gets a Sturm
/// sequence over primitive integer polynomials, intervals of (0, B] are
/// bisected until each holds one root, then refined by exact sign bisection
/// to width <= tol. Sorted by position.
std::vector<RootInterval> positive_real_roots(const Decomposition& dec, double tol);

struct RootOrbit {
  double radius;      // > 0
  double base_angle;  // 0 for positive Q roots, pi/r for negative ones
  int multiplicity;
  /// |H(xi)| / sum |c_e| |xi|^e at the reported base root xi
  double backward_error;
};

struct RootSet {
  int r = 2;
  int n = 0;
  int zero_multiplicity = 0;
  /// Each orbit stands for the r roots radius * exp(i(base_angle + 2 pi j / r)).
  std::vector<RootOrbit> orbits;
  /// Roots of Q off the real axis, repeated by multiplicity; each yields r roots.
  std::vector<std::complex<double>> non_real_q_roots;
  Decomposition decomposition;

  int total_multiplicity() const;
  struct Root {
    std::complex<double> value;
    int multiplicity;
  };
  /// Every root with its multiplicity: zero first, then orbits by radius,
  /// then the r-th roots of non-real Q roots.
  std::vector<Root> expand() const;
};

/// Roots of H_n^r, verified against |H(xi)| <= tol * sum |c_e| |xi|^e.
/// Requires n >= 1.
RootSet all_roots(const FamilyParams& params, double tol = 1e-12);

/// Same pipeline for any decomposition; poly is used for verification.
RootSet roots_from_decomposition(const Decomposition& dec, const IntPoly& poly, double tol);

nlohmann::ordered_json roots_to_json(const RootSet& roots);
/// "re,im,multiplicity" lines, one per root.
std::string roots_to_csv(const RootSet& roots);

}  // namespace ghp

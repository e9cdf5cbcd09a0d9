#pragma once

// Dense univariate polynomials over Z and Q used by root isolation.
// Coefficients are stored lowest degree first; the zero polynomial is empty.

#include <gmpxx.h>

#include <vector>

namespace ghp::detail {

using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

void trim(ZPoly& p);
void trim(QPoly& p);
int degree(const ZPoly& p);  // -1 for zero
int degree(const QPoly& p);

ZPoly derivative(const ZPoly& p);
QPoly derivative(const QPoly& p);

/// Positive content removed; sign of the leading coefficient kept.
ZPoly primitive_part(const ZPoly& p);
QPoly to_rational(const ZPoly& p);
/// Clears denominators and returns the primitive integer multiple with the
/// same sign of leading coefficient.
ZPoly to_primitive_integer(const QPoly& p);

QPoly monic(const QPoly& p);
QPoly sub(const QPoly& a, const QPoly& b);
/// Quotient and remainder over Q.
void divmod(const QPoly& a, const QPoly& b, QPoly& quotient, QPoly& remainder);
QPoly exact_div(const QPoly& a, const QPoly& b);
/// Monic gcd over Q (empty when both inputs are zero).
QPoly gcd(const QPoly& a, const QPoly& b);

/// Yun square-free factorization of a nonconstant p: factors[i] is the monic
/// product of the irreducible factors with multiplicity i + 1 (possibly 1).
std::vector<QPoly> squarefree_factors(const QPoly& p);

/// Sign (-1, 0, 1) of p at a rational point, evaluated exactly.
int sign_at(const ZPoly& p, const mpq_class& x);
int sign_at_infinity(const ZPoly& p);

/// Sturm sequence over primitive integer polynomials: p, p', then negated
/// pseudo-remainders with content stripped.
std::vector<ZPoly> sturm_sequence(const ZPoly& p);
/// Sign changes of the sequence at x (zeros skipped).
int sign_variations(const std::vector<ZPoly>& seq, const mpq_class& x);
int sign_variations_at_infinity(const std::vector<ZPoly>& seq);
/// Number of distinct real roots of the sequence head in (lo, hi].
int count_roots(const std::vector<ZPoly>& seq, const mpq_class& lo, const mpq_class& hi);

/// Power of two strictly above every root modulus (Cauchy bound).
mpq_class root_bound(const ZPoly& p);

/// p(-z)
ZPoly reflect(const ZPoly& p);

}  // namespace ghp::detail

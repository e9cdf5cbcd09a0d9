#pragma once

#include <gmpxx.h>

#include <complex>

#include "ghp/hermite.hpp"
#include "ghp/log_complex.hpp"

namespace ghp {

inline constexpr int kDefaultPrecisionBits = 128;

/// Exact value of poly at a rational point.
mpq_class eval_exact(const IntPoly& poly, const mpq_class& x);

/// Evaluates poly at x in log-polar form.
///
/// The input x is taken as the exact dyadic number its doubles represent.
/// Evaluation runs in MPFR with a running bound on the Horner rounding error
/// (relative to sum |c_e| |x|^e); the working precision is raised until that
/// bound is below 2^-precision_bits times the computed |value|, so the value
/// carries precision_bits correct bits (guard g = 0) before the final rounding
/// of (ln|value|, arg value) to double. When the bound cannot separate the
/// value from zero, the point is evaluated exactly over Gaussian integers and
/// an exact zero is reported as is_zero. Deterministic for fixed inputs.
///
/// precision_bits must be >= 53 (std::invalid_argument otherwise).
LogComplex eval_log_complex(const IntPoly& poly, std::complex<double> x,
                            int precision_bits = kDefaultPrecisionBits);

/// ln(sum |c_e| |x|^e), the natural scale for backward-error checks.
/// Returns -inf for the zero polynomial.
double log_abs_scale(const IntPoly& poly, double abs_x, int precision_bits = kDefaultPrecisionBits);

}  // namespace ghp

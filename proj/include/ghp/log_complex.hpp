#pragma once

#include <complex>

namespace ghp {

/// Maps an angle into (-pi, pi]; -pi itself goes to +pi.
double normalize_angle(double angle);

/// Complex number held as (ln|z|, arg z). Magnitudes like exp(x^r) for large
/// x stay representable; is_zero marks an exact zero and makes the other two
/// fields meaningless.
struct LogComplex {
  double log_magnitude = 0.0;
  double argument = 0.0;
  bool is_zero = false;

  static LogComplex zero() { return {0.0, 0.0, true}; }
  static LogComplex polar(double log_magnitude, double argument);
  /// exp(log_value), without evaluating the exponential.
  static LogComplex exp_of(std::complex<double> log_value);
  static LogComplex from_complex(std::complex<double> z);

  /// Materializes the value; overflows to inf for huge log_magnitude.
  std::complex<double> to_complex() const;

  friend LogComplex operator*(const LogComplex& a, const LogComplex& b);
  friend LogComplex operator/(const LogComplex& a, const LogComplex& b);
};

}  // namespace ghp

#include "ghp/log_complex.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ghp {

double normalize_angle(double angle) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double a = std::remainder(angle, two_pi);  // [-pi, pi]
  if (a <= -std::numbers::pi) a += two_pi;
  return a;
}

LogComplex LogComplex::polar(double log_magnitude, double argument) {
  return {log_magnitude, normalize_angle(argument), false};
}

LogComplex LogComplex::exp_of(std::complex<double> log_value) {
  return polar(log_value.real(), log_value.imag());
}

LogComplex LogComplex::from_complex(std::complex<double> z) {
  if (z == 0.0) return zero();
  return polar(std::log(std::abs(z)), std::arg(z));
}

std::complex<double> LogComplex::to_complex() const {
  if (is_zero) return {0.0, 0.0};
  return std::polar(std::exp(log_magnitude), argument);
}

LogComplex operator*(const LogComplex& a, const LogComplex& b) {
  if (a.is_zero || b.is_zero) return LogComplex::zero();
  return LogComplex::polar(a.log_magnitude + b.log_magnitude, a.argument + b.argument);
}

LogComplex operator/(const LogComplex& a, const LogComplex& b) {
  if (b.is_zero) throw std::domain_error("LogComplex division by zero");
  if (a.is_zero) return LogComplex::zero();
  return LogComplex::polar(a.log_magnitude - b.log_magnitude, a.argument - b.argument);
}

}  // namespace ghp

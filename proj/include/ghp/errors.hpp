#pragma once

#include <stdexcept>
#include <string>

namespace ghp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument lies outside the region where an approximation or series is
/// defined (caustic guard band, series disc, t = 0 with n > 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Raised by amplitude_g when x is within caustic_epsilon of r*t.
class CausticSingularity : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Series hit max_terms or Newton hit its iteration cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class MalformedPolynomial : public Error {
 public:
  using Error::Error;
};

}  // namespace ghp

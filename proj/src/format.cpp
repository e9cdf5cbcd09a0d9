#include "ghp/format.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ghp {

std::string format_number(double value) {
  if (!std::isfinite(value)) throw std::domain_error("format_number: non-finite value");
  if (value == 0.0) value = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", value);
  return buf;
}

}  // namespace ghp

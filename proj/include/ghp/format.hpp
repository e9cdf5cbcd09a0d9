#pragma once

#include <string>

namespace ghp {

/// 17 significant digits in lowercase scientific notation, e.g.
/// "1.6493848884661008e+00". Negative zero prints as zero.
/// Throws std::domain_error for NaN or infinity.
std::string format_number(double value);

}  // namespace ghp

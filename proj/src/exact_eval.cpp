#include "ghp/exact_eval.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mpfr_real.hpp"

namespace ghp {
namespace {

using detail::MpfrComplex;
using detail::MpfrReal;

struct HornerResult {
  MpfrComplex value;
  MpfrReal abs_scale;  // sum |c_e| |x|^e at working precision
  std::size_t ops;     // rounded operations along the longest dependency chain
};

HornerResult horner(const IntPoly& poly, std::complex<double> x, mpfr_prec_t bits) {
  const MpfrComplex xc(x.real(), x.imag(), bits);
  MpfrReal ax(std::abs(x), bits);
  MpfrComplex acc(bits);
  MpfrReal scale(bits);
  std::size_t ops = 0;

  auto it = poly.terms().rbegin();
  std::size_t current = it->first;
  acc.re = MpfrReal(it->second, bits);
  mpfr_abs(scale.get(), acc.re.get(), MPFR_RNDN);
  auto step = [&](std::size_t gap) {
    acc.mul(pow(xc, gap));
    MpfrReal ap(bits);
    mpfr_pow_ui(ap.get(), ax.get(), gap, MPFR_RNDN);
    mpfr_mul(scale.get(), scale.get(), ap.get(), MPFR_RNDN);
    ops += 2 * std::bit_width(gap) + 2;
  };
  for (++it; it != poly.terms().rend(); ++it) {
    step(current - it->first);
    MpfrReal c(it->second, bits);
    acc.add_real(c);
    mpfr_abs(c.get(), c.get(), MPFR_RNDN);
    mpfr_add(scale.get(), scale.get(), c.get(), MPFR_RNDN);
    ops += 2;
    current = it->first;
  }
  if (current > 0) step(current);
  return {std::move(acc), std::move(scale), ops + 2};
}

double log2_of(const MpfrReal& v) {
  if (v.is_zero()) return -std::numeric_limits<double>::infinity();
  MpfrReal out(v.precision());
  mpfr_log2(out.get(), v.get(), MPFR_RNDN);
  return out.to_double();
}

LogComplex to_log_complex(const MpfrComplex& v) {
  if (v.is_zero()) return LogComplex::zero();
  MpfrReal mag = v.abs();
  MpfrReal lg(mag.precision());
  mpfr_log(lg.get(), mag.get(), MPFR_RNDN);
  MpfrReal arg(mag.precision());
  mpfr_atan2(arg.get(), v.im.get(), v.re.get(), MPFR_RNDN);
  return LogComplex::polar(lg.to_double(), arg.to_double());
}

// Gaussian-rational Horner. The doubles in x are exact dyadic rationals.
LogComplex eval_exact_complex(const IntPoly& poly, std::complex<double> x, mpfr_prec_t bits) {
  const mpq_class xr(x.real()), xi(x.imag());
  mpq_class re = 0, im = 0;
  std::size_t current = poly.degree();
  auto mul_x = [&](std::size_t times) {
    for (std::size_t k = 0; k < times; ++k) {
      mpq_class nr = re * xr - im * xi;
      mpq_class ni = re * xi + im * xr;
      re = std::move(nr);
      im = std::move(ni);
    }
  };
  for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
    mul_x(current - it->first);
    re += it->second;
    current = it->first;
  }
  mul_x(current);
  MpfrComplex v(bits);
  v.re = MpfrReal(re, bits);
  v.im = MpfrReal(im, bits);
  return to_log_complex(v);
}

}  // namespace

mpq_class eval_exact(const IntPoly& poly, const mpq_class& x) {
  return evaluate<mpq_class>(poly, x);
}

LogComplex eval_log_complex(const IntPoly& poly, std::complex<double> x, int precision_bits) {
  if (precision_bits < 53) throw std::invalid_argument("precision_bits must be >= 53");
  if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
    throw std::invalid_argument("eval_log_complex: non-finite argument");
  if (poly.is_zero()) return LogComplex::zero();

  const double target = precision_bits;
  // Past this the exact path is cheaper than more bits.
  const mpfr_prec_t max_bits = 64 * static_cast<mpfr_prec_t>(precision_bits) + 4096;
  mpfr_prec_t bits = precision_bits + 16 + std::bit_width(poly.degree() + 1);

  while (bits <= max_bits) {
    HornerResult h = horner(poly, x, bits);
    const double log2_value = log2_of(h.value.abs());
    // err <= 8 * ops * 2^-bits * scale
    const double log2_err =
        std::log2(8.0 * static_cast<double>(h.ops)) - static_cast<double>(bits) + log2_of(h.abs_scale);
    if (log2_err <= log2_value - target - 1.0) return to_log_complex(h.value);
    if (log2_value > log2_err + 1.0) {
      bits += static_cast<mpfr_prec_t>(std::ceil(log2_err - log2_value + target)) + 16;
    } else {
      bits *= 2;
    }
  }
  return eval_exact_complex(poly, x, precision_bits + 64);
}

double log_abs_scale(const IntPoly& poly, double abs_x, int precision_bits) {
  if (poly.is_zero()) return -std::numeric_limits<double>::infinity();
  HornerResult h = horner(poly, {std::abs(abs_x), 0.0}, precision_bits);
  MpfrReal lg(precision_bits);
  mpfr_log(lg.get(), h.abs_scale.get(), MPFR_RNDN);
  return lg.to_double();
}

}  // namespace ghp

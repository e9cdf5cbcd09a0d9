#pragma once

// Minimal value-semantic wrapper over mpfr_t; only what the evaluators need.

#include <gmpxx.h>
#include <mpfr.h>

#include <utility>

namespace ghp::detail {

class MpfrReal {
 public:
  explicit MpfrReal(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  MpfrReal(double x, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_d(v_, x, MPFR_RNDN); }
  MpfrReal(const mpz_class& x, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
  }
  MpfrReal(const mpq_class& x, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
  }
  MpfrReal(const MpfrReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  MpfrReal(MpfrReal&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  MpfrReal& operator=(MpfrReal o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~MpfrReal() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

 private:
  mpfr_t v_;
};

/// Complex number over two MpfrReal parts; rounding to nearest throughout.
struct MpfrComplex {
  MpfrReal re;
  MpfrReal im;

  explicit MpfrComplex(mpfr_prec_t bits) : re(bits), im(bits) {}
  MpfrComplex(double r, double i, mpfr_prec_t bits) : re(r, bits), im(i, bits) {}

  mpfr_prec_t precision() const { return re.precision(); }

  // this = this * o
  void mul(const MpfrComplex& o) {
    const mpfr_prec_t p = precision();
    MpfrReal ac(p), bd(p), ad(p), bc(p);
    mpfr_mul(ac.get(), re.get(), o.re.get(), MPFR_RNDN);
    mpfr_mul(bd.get(), im.get(), o.im.get(), MPFR_RNDN);
    mpfr_mul(ad.get(), re.get(), o.im.get(), MPFR_RNDN);
    mpfr_mul(bc.get(), im.get(), o.re.get(), MPFR_RNDN);
    mpfr_sub(re.get(), ac.get(), bd.get(), MPFR_RNDN);
    mpfr_add(im.get(), ad.get(), bc.get(), MPFR_RNDN);
  }

  void add_real(const MpfrReal& a) { mpfr_add(re.get(), re.get(), a.get(), MPFR_RNDN); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  MpfrReal abs() const {
    MpfrReal out(precision());
    mpfr_hypot(out.get(), re.get(), im.get(), MPFR_RNDN);
    return out;
  }
};

inline MpfrComplex pow(const MpfrComplex& x, std::size_t k) {
  MpfrComplex result(1.0, 0.0, x.precision());
  MpfrComplex base = x;
  while (k) {
    if (k & 1u) result.mul(base);
    k >>= 1u;
    if (k) {
      MpfrComplex sq = base;
      sq.mul(base);
      base = std::move(sq);
    }
  }
  return result;
}

}  // namespace ghp::detail

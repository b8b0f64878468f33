#pragma once

#include <mpfr.h>

#include <algorithm>
#include <complex>
#include <string>
#include <utility>

#include "cburgers/rational.hpp"

namespace cburgers {

inline constexpr mpfr_prec_t kDefaultPrec = 256;
inline constexpr mpfr_prec_t kMinPrec = 53;

namespace detail {
// MPFR keeps per-thread caches for constants and transcendental tables;
// release the main thread's share at program end.
struct MpfrCacheGuard {
  ~MpfrCacheGuard() { mpfr_free_cache(); }
};
inline const MpfrCacheGuard mpfr_cache_guard{};
}  // namespace detail

// Value-semantic wrapper around mpfr_t. Every value carries its own precision;
// binary operations produce results at the wider of the two operand
// precisions, rounded to nearest.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = kDefaultPrec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(double x, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  BigFloat(long x, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  BigFloat(int x, mpfr_prec_t prec) : BigFloat(static_cast<long>(x), prec) {}
  BigFloat(const Rational& q, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, 2);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat from_string(const std::string& s, mpfr_prec_t prec) {
    BigFloat r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw std::invalid_argument("BigFloat: cannot parse '" + s + "'");
    return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  // Same value carried at a different precision (rounded if narrower).
  BigFloat with_prec(mpfr_prec_t prec) const {
    BigFloat r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  // Decimal string with enough digits to round-trip at this precision.
  std::string str(int digits = 0) const {
    if (digits <= 0) digits = static_cast<int>(prec() * 0.30103) + 3;
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  BigFloat& operator+=(const BigFloat& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator-=(const BigFloat& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator*=(const BigFloat& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) != 0; }

  friend BigFloat exp(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_exp(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat log(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat sin(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_sin(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat cos(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_cos(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat sqrt(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat abs(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat pow_ui(const BigFloat& a, unsigned long n) {
    BigFloat r(a.prec());
    mpfr_pow_ui(r.v_, a.v_, n, MPFR_RNDN);
    return r;
  }
  friend BigFloat hypot(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat r(std::max(y.prec(), x.prec()));
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
  }
  static BigFloat pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  // 2^e as a BigFloat, handy for precision bounds.
  static BigFloat pow2(long e, mpfr_prec_t prec = 64) {
    BigFloat r(prec);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }

 private:
  mpfr_t v_;
};

class BigComplex {
 public:
  explicit BigComplex(mpfr_prec_t prec = kDefaultPrec) : re_(prec), im_(prec) {}
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  BigComplex(double re, double im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}
  BigComplex(const GaussianRational& g, mpfr_prec_t prec) : re_(g.re, prec), im_(g.im, prec) {}
  BigComplex(const std::complex<double>& z, mpfr_prec_t prec)
      : re_(z.real(), prec), im_(z.imag(), prec) {}

  const BigFloat& real() const { return re_; }
  const BigFloat& imag() const { return im_; }
  BigFloat& real() { return re_; }
  BigFloat& imag() { return im_; }
  mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
  BigComplex conj() const { return {re_, -im_}; }

  BigComplex times_i(int power = 1) const {
    switch (((power % 4) + 4) % 4) {
      case 0: return *this;
      case 1: return {-im_, re_};
      case 2: return {-re_, -im_};
      default: return {im_, -re_};
    }
  }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend BigComplex operator-(const BigComplex& a) { return {-a.re_, -a.im_}; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend BigComplex operator*(const BigFloat& s, const BigComplex& z) {
    return {s * z.re_, s * z.im_};
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat n2 = b.re_ * b.re_ + b.im_ * b.im_;
    return {(a.re_ * b.re_ + a.im_ * b.im_) / n2, (a.im_ * b.re_ - a.re_ * b.im_) / n2};
  }
  BigComplex& operator+=(const BigComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  BigComplex& operator-=(const BigComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }

  friend BigFloat abs(const BigComplex& z) { return hypot(z.re_, z.im_); }
  friend BigFloat arg(const BigComplex& z) { return atan2(z.im_, z.re_); }
  // exp(x + iy) = e^x (cos y + i sin y)
  friend BigComplex exp(const BigComplex& z) {
    BigFloat m = exp(z.re_);
    return {m * cos(z.im_), m * sin(z.im_)};
  }

  std::string str() const { return re_.str() + (im_.sign() < 0 ? " - " : " + ") + abs(im_).str() + "i"; }

 private:
  BigFloat re_, im_;
};

}  // namespace cburgers

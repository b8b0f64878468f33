#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cburgers {

using Rational = mpq_class;

// Parse "p/q", "p", or a decimal string ("0.4", "-1.25e-3") into an exact
// rational. Decimal input is read digit-by-digit, so "0.4" becomes 2/5, not
// the nearest double.
Rational parse_rational(const std::string& text);

std::string rational_str(const Rational& q);

// A complex number with exact rational real and imaginary parts. Closed under
// +, -, *, / (division by zero rejected), which is what the coefficient
// recursions need.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit ok
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r, long i) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }

  // Multiply by i^power (power may be negative).
  GaussianRational times_i(int power = 1) const {
    switch (((power % 4) + 4) % 4) {
      case 0: return *this;
      case 1: return {-im, re};
      case 2: return {-re, -im};
      default: return {im, -re};
    }
  }

  GaussianRational pow_u(unsigned n) const {
    GaussianRational acc{1, 0};
    for (unsigned i = 0; i < n; ++i) acc = acc * *this;
    return acc;
  }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n2 = b.norm2();
    if (n2 == 0) throw std::domain_error("GaussianRational: division by zero");
    return {(a.re * b.re + a.im * b.im) / n2, (a.im * b.re - a.re * b.im) / n2};
  }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  static GaussianRational parse(const std::string& re_text, const std::string& im_text) {
    return {parse_rational(re_text), parse_rational(im_text)};
  }

  std::string str() const;
};

}  // namespace cburgers

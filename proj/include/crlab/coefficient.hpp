#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace crlab {

using Rational = mpq_class;

// Exact Gaussian rational re + im*i.
class Coeff {
 public:
  Coeff() = default;
  Coeff(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  Coeff(Rational re) : re_(std::move(re)), im_(0) {}  // NOLINT
  Coeff(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Coeff i() { return Coeff(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Coeff conj() const { return Coeff(re_, -im_); }
  // |c|^2 as an exact rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  Coeff& operator*=(const Coeff& o);
  Coeff& operator/=(const Coeff& o);

  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
  friend Coeff operator/(Coeff a, const Coeff& b) { return a /= b; }
  Coeff operator-() const { return Coeff(-re_, -im_); }

  friend bool operator==(const Coeff& a, const Coeff& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

  Coeff pow(unsigned e) const;

  std::complex<double> to_complex() const {
    return {re_.get_d(), im_.get_d()};
  }

  // Canonical text, parseable by the expression grammar: "3/2", "-i",
  // "(1/2-3*i)". Parentheses appear only when both parts are nonzero.
  std::string to_string() const;

  // True when the printed form starts with '-' and has no parentheses, so
  // the caller may print it as a subtraction.
  bool prints_negative() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

// Exact square root of a nonnegative rational, if it is a perfect square.
bool rational_sqrt(const Rational& q, Rational& out);

}  // namespace crlab

#include "crlab/coefficient.hpp"

namespace crlab {

Coeff& Coeff::operator+=(const Coeff& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Coeff& Coeff::operator*=(const Coeff& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Coeff& Coeff::operator/=(const Coeff& o) {
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const Rational n = o.norm();
  Rational re = (re_ * o.re_ + im_ * o.im_) / n;
  Rational im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Coeff Coeff::pow(unsigned e) const {
  Coeff result(1);
  Coeff base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

namespace {

std::string imag_text(const Rational& im) {
  if (im == 1) return "i";
  if (im == -1) return "-i";
  return im.get_str() + "*i";
}

}  // namespace

std::string Coeff::to_string() const {
  const bool has_re = sgn(re_) != 0;
  const bool has_im = sgn(im_) != 0;
  if (!has_im) return re_.get_str();
  if (!has_re) return imag_text(im_);
  std::string s = "(" + re_.get_str();
  if (sgn(im_) > 0) s += "+";
  s += imag_text(im_);
  s += ")";
  return s;
}

bool Coeff::prints_negative() const {
  if (sgn(im_) == 0) return sgn(re_) < 0;
  if (sgn(re_) == 0) return sgn(im_) < 0;
  return false;
}

bool rational_sqrt(const Rational& q, Rational& out) {
  if (sgn(q) < 0) return false;
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t())) {
    return false;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  out = Rational(rn, rd);
  out.canonicalize();
  return true;
}

}  // namespace crlab

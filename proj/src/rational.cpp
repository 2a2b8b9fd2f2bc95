#include "wigner/rational.hpp"

#include <stdexcept>

namespace wigner {

Rational rat(long n, long d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw std::invalid_argument("not a rational number: '" + text + "'");
  if (sgn(q.get_den()) == 0) throw std::domain_error("rational with zero denominator");
  q.canonicalize();
  return q;
}

CRat& CRat::operator+=(const CRat& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

CRat& CRat::operator-=(const CRat& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

CRat& CRat::operator*=(const CRat& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

CRat& CRat::operator/=(const CRat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  Rational den = o.re_ * o.re_ + o.im_ * o.im_;
  Rational re = (re_ * o.re_ + im_ * o.im_) / den;
  Rational im = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string to_string(const CRat& c) {
  if (c.is_real()) return to_string(c.re());
  if (c.is_imaginary()) return to_string(c.im()) + " i";
  std::string im = to_string(abs(c.im()));
  return to_string(c.re()) + (sgn(c.im()) < 0 ? " - " : " + ") + im + " i";
}

}  // namespace wigner

#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace wigner {

// Arbitrary precision rational, always kept in lowest terms with a positive
// denominator (GMP canonical form).
using Rational = mpq_class;

// Canonical n/d. Throws std::domain_error when d == 0.
Rational rat(long n, long d = 1);

// "3", "-1/2"
std::string to_string(const Rational& q);

// Parses "n" or "n/d" (optional leading '-').
Rational parse_rational(const std::string& text);

// Exact complex rational re + i*im.
class CRat {
 public:
  CRat() = default;
  CRat(Rational re) : re_(std::move(re)) {}  // NOLINT: implicit on purpose
  CRat(long re) : re_(re) {}                 // NOLINT
  CRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static CRat i() { return CRat(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_imaginary() const { return sgn(re_) == 0; }

  CRat conj() const { return CRat(re_, -im_); }
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  CRat operator-() const { return CRat(-re_, -im_); }
  CRat& operator+=(const CRat& o);
  CRat& operator-=(const CRat& o);
  CRat& operator*=(const CRat& o);
  CRat& operator/=(const CRat& o);

  friend CRat operator+(CRat a, const CRat& b) { return a += b; }
  friend CRat operator-(CRat a, const CRat& b) { return a -= b; }
  friend CRat operator*(CRat a, const CRat& b) { return a *= b; }
  friend CRat operator/(CRat a, const CRat& b) { return a /= b; }
  friend bool operator==(const CRat& a, const CRat& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  Rational re_{0};
  Rational im_{0};
};

std::string to_string(const CRat& c);

}  // namespace wigner

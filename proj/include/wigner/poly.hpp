#pragma once

#include <complex>
#include <map>
#include <utility>

#include "wigner/rational.hpp"

namespace wigner {

// Exponent pair (power of x, power of p).
struct Exponents {
  int x = 0;
  int p = 0;
  auto operator<=>(const Exponents&) const = default;
};

// Exact polynomial in phase-space coordinates x, p with complex rational
// coefficients. Zero coefficients are never stored.
class PolySymbol {
 public:
  using Terms = std::map<Exponents, CRat>;

  PolySymbol() = default;
  explicit PolySymbol(Terms terms);
  PolySymbol(const CRat& c);  // NOLINT: constants convert implicitly

  static PolySymbol x();
  static PolySymbol p();
  static PolySymbol monomial(int a, int b, const CRat& c = CRat(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree() const;
  CRat coeff(int a, int b) const;

  PolySymbol conj() const;
  PolySymbol dx(int order = 1) const;
  PolySymbol dp(int order = 1) const;
  std::complex<double> evaluate(double x, double p) const;

  PolySymbol operator-() const;
  PolySymbol& operator+=(const PolySymbol& o);
  PolySymbol& operator-=(const PolySymbol& o);
  PolySymbol& operator*=(const CRat& c);

  friend PolySymbol operator+(PolySymbol a, const PolySymbol& b) { return a += b; }
  friend PolySymbol operator-(PolySymbol a, const PolySymbol& b) { return a -= b; }
  friend PolySymbol operator*(const PolySymbol& a, const PolySymbol& b);
  friend PolySymbol operator*(PolySymbol a, const CRat& c) { return a *= c; }
  friend PolySymbol operator*(const CRat& c, PolySymbol a) { return a *= c; }
  friend bool operator==(const PolySymbol& a, const PolySymbol& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

// Falling factorial n (n-1) ... (n-k+1); zero when k > n.
mpz_class falling(int n, int k);
mpz_class binomial(int n, int k);

}  // namespace wigner

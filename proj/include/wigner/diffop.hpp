#pragma once

#include <map>

#include "wigner/poly.hpp"
#include "wigner/rational.hpp"

namespace wigner {

// Normal-ordered monomial operator W -> x^a p^b d_x^c d_p^d W.
// Derivatives act on W first, the polynomial multiplies afterwards.
struct OpMonomial {
  int a = 0;  // power of x
  int b = 0;  // power of p
  int c = 0;  // order of d/dx
  int d = 0;  // order of d/dp
  auto operator<=>(const OpMonomial&) const = default;

  int order() const { return c + d; }
};

// Finite linear combination of normal-ordered monomials acting on an abstract
// W, tagged with the rational value substituted for hbar. Two expressions are
// equal iff their term maps (and hbar) are identical.
class DiffOpExpr {
 public:
  using Terms = std::map<OpMonomial, CRat>;

  DiffOpExpr() : hbar_(1) {}
  explicit DiffOpExpr(Rational hbar) : hbar_(std::move(hbar)) {}
  DiffOpExpr(Terms terms, Rational hbar);

  static DiffOpExpr identity(const Rational& hbar = 1);
  static DiffOpExpr monomial(OpMonomial m, const CRat& c, const Rational& hbar = 1);
  // Pointwise multiplication W -> f W.
  static DiffOpExpr multiply(const PolySymbol& f, const Rational& hbar = 1);
  static DiffOpExpr dx(const Rational& hbar = 1);
  static DiffOpExpr dp(const Rational& hbar = 1);
  static DiffOpExpr laplacian(const Rational& hbar = 1);

  const Rational& hbar() const { return hbar_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  CRat coeff(const OpMonomial& m) const;
  int max_order() const;

  // Acts on a polynomial stand-in for W.
  PolySymbol apply(const PolySymbol& w) const;

  DiffOpExpr operator-() const;
  friend DiffOpExpr operator+(const DiffOpExpr& a, const DiffOpExpr& b);
  friend DiffOpExpr operator-(const DiffOpExpr& a, const DiffOpExpr& b);
  friend DiffOpExpr operator*(const CRat& c, const DiffOpExpr& e);
  friend bool operator==(const DiffOpExpr& a, const DiffOpExpr& b) {
    return a.hbar_ == b.hbar_ && a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
  Rational hbar_;
};

// Normal form of E1 o E2 (E2 acts first). Throws UnitMismatch if hbar differs.
DiffOpExpr compose(const DiffOpExpr& e1, const DiffOpExpr& e2);

// Formal transpose under the integral dx dp: x^T = x, d^T = -d, order of
// composition reversed. Linear (coefficients are not conjugated).
DiffOpExpr adjoint(const DiffOpExpr& e);

DiffOpExpr scale_and_add(const CRat& c1, const DiffOpExpr& e1, const CRat& c2, const DiffOpExpr& e2);

}  // namespace wigner

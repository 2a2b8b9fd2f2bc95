#include "wigner/diffop.hpp"

#include <algorithm>

#include "wigner/errors.hpp"

namespace wigner {

namespace {

void accumulate(DiffOpExpr::Terms& terms, const OpMonomial& m, const CRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

void require_same_hbar(const DiffOpExpr& a, const DiffOpExpr& b) {
  if (a.hbar() != b.hbar())
    throw UnitMismatch("operator expressions built with different hbar (" + to_string(a.hbar()) +
                       " vs " + to_string(b.hbar()) + ")");
}

}  // namespace

DiffOpExpr::DiffOpExpr(Terms terms, Rational hbar) : hbar_(std::move(hbar)) {
  for (auto& [m, c] : terms)
    if (!c.is_zero()) terms_.emplace(m, std::move(c));
}

DiffOpExpr DiffOpExpr::identity(const Rational& hbar) { return monomial({}, CRat(1), hbar); }

DiffOpExpr DiffOpExpr::monomial(OpMonomial m, const CRat& c, const Rational& hbar) {
  Terms t;
  t.emplace(m, c);
  return DiffOpExpr(std::move(t), hbar);
}

DiffOpExpr DiffOpExpr::multiply(const PolySymbol& f, const Rational& hbar) {
  Terms t;
  for (const auto& [e, c] : f.terms()) t.emplace(OpMonomial{e.x, e.p, 0, 0}, c);
  return DiffOpExpr(std::move(t), hbar);
}

DiffOpExpr DiffOpExpr::dx(const Rational& hbar) { return monomial({0, 0, 1, 0}, CRat(1), hbar); }
DiffOpExpr DiffOpExpr::dp(const Rational& hbar) { return monomial({0, 0, 0, 1}, CRat(1), hbar); }

DiffOpExpr DiffOpExpr::laplacian(const Rational& hbar) {
  Terms t;
  t.emplace(OpMonomial{0, 0, 2, 0}, CRat(1));
  t.emplace(OpMonomial{0, 0, 0, 2}, CRat(1));
  return DiffOpExpr(std::move(t), hbar);
}

CRat DiffOpExpr::coeff(const OpMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CRat() : it->second;
}

int DiffOpExpr::max_order() const {
  int k = 0;
  for (const auto& [m, c] : terms_) k = std::max(k, m.order());
  return k;
}

PolySymbol DiffOpExpr::apply(const PolySymbol& w) const {
  PolySymbol out;
  for (const auto& [m, c] : terms_) {
    PolySymbol d = w.dx(m.c).dp(m.d);
    out += PolySymbol::monomial(m.a, m.b, c) * d;
  }
  return out;
}

DiffOpExpr DiffOpExpr::operator-() const {
  Terms t;
  for (const auto& [m, c] : terms_) t.emplace(m, -c);
  return DiffOpExpr(std::move(t), hbar_);
}

DiffOpExpr operator+(const DiffOpExpr& a, const DiffOpExpr& b) {
  return scale_and_add(CRat(1), a, CRat(1), b);
}

DiffOpExpr operator-(const DiffOpExpr& a, const DiffOpExpr& b) {
  return scale_and_add(CRat(1), a, CRat(-1), b);
}

DiffOpExpr operator*(const CRat& c, const DiffOpExpr& e) {
  DiffOpExpr::Terms t;
  if (!c.is_zero())
    for (const auto& [m, v] : e.terms_) t.emplace(m, c * v);
  return DiffOpExpr(std::move(t), e.hbar_);
}

DiffOpExpr scale_and_add(const CRat& c1, const DiffOpExpr& e1, const CRat& c2, const DiffOpExpr& e2) {
  require_same_hbar(e1, e2);
  DiffOpExpr::Terms t;
  for (const auto& [m, c] : e1.terms()) accumulate(t, m, c1 * c);
  for (const auto& [m, c] : e2.terms()) accumulate(t, m, c2 * c);
  return DiffOpExpr(std::move(t), e1.hbar());
}

// d_x^c o x^a = sum_k C(c,k) a!/(a-k)! x^(a-k) d_x^(c-k), and likewise in p.
DiffOpExpr compose(const DiffOpExpr& e1, const DiffOpExpr& e2) {
  require_same_hbar(e1, e2);
  DiffOpExpr::Terms t;
  for (const auto& [m1, c1] : e1.terms()) {
    for (const auto& [m2, c2] : e2.terms()) {
      const CRat base = c1 * c2;
      for (int k = 0; k <= std::min(m1.c, m2.a); ++k) {
        const mpz_class wx = binomial(m1.c, k) * falling(m2.a, k);
        for (int l = 0; l <= std::min(m1.d, m2.b); ++l) {
          const mpz_class w = wx * binomial(m1.d, l) * falling(m2.b, l);
          OpMonomial m{m1.a + m2.a - k, m1.b + m2.b - l, m1.c + m2.c - k, m1.d + m2.d - l};
          accumulate(t, m, base * CRat(Rational(w)));
        }
      }
    }
  }
  return DiffOpExpr(std::move(t), e1.hbar());
}

// (x^a p^b d_x^c d_p^d)^T = (-1)^(c+d) d_x^c d_p^d o x^a p^b
DiffOpExpr adjoint(const DiffOpExpr& e) {
  DiffOpExpr out(e.hbar());
  for (const auto& [m, c] : e.terms()) {
    const CRat sign = (m.order() % 2 == 0) ? CRat(1) : CRat(-1);
    DiffOpExpr derivs = DiffOpExpr::monomial({0, 0, m.c, m.d}, sign * c, e.hbar());
    DiffOpExpr poly = DiffOpExpr::monomial({m.a, m.b, 0, 0}, CRat(1), e.hbar());
    out = out + compose(derivs, poly);
  }
  return out;
}

}  // namespace wigner

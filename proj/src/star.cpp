#include "wigner/star.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace wigner {

PolySymbol star_poly(const PolySymbol& f, const PolySymbol& g, const Rational& hbar) {
  PolySymbol out;
  const int nmax = std::min(f.degree(), g.degree());
  const CRat half_i_hbar = CRat(Rational(0), Rational(hbar / 2));
  CRat prefactor(1);  // (i hbar/2)^n / n!
  for (int n = 0; n <= nmax; ++n) {
    if (n > 0) prefactor = prefactor * half_i_hbar / CRat(Rational(n));
    for (int k = 0; k <= n; ++k) {
      // (<-dx ->dp - <-dp ->dx)^n, k counts the second factor
      Rational w(binomial(n, k));
      if (k % 2 == 1) w = -w;
      PolySymbol lhs = f.dx(n - k).dp(k);
      if (lhs.is_zero()) continue;
      PolySymbol rhs = g.dp(n - k).dx(k);
      if (rhs.is_zero()) continue;
      out += (lhs * rhs) * (prefactor * CRat(w));
    }
  }
  return out;
}

DiffOpExpr bopp(const PolySymbol& f, BoppSide side, const Rational& hbar) {
  const Rational half = hbar / 2;
  const CRat s = side == BoppSide::Left ? CRat(1) : CRat(-1);
  // X = x + s (i hbar/2) d_p,  P = p - s (i hbar/2) d_x
  const DiffOpExpr X = DiffOpExpr::monomial({1, 0, 0, 0}, CRat(1), hbar) +
                       DiffOpExpr::monomial({0, 0, 0, 1}, s * CRat(Rational(0), half), hbar);
  const DiffOpExpr P = DiffOpExpr::monomial({0, 1, 0, 0}, CRat(1), hbar) +
                       DiffOpExpr::monomial({0, 0, 1, 0}, -s * CRat(Rational(0), half), hbar);

  int max_a = 0, max_b = 0;
  for (const auto& [e, c] : f.terms()) {
    max_a = std::max(max_a, e.x);
    max_b = std::max(max_b, e.p);
  }
  std::vector<DiffOpExpr> xpow{DiffOpExpr::identity(hbar)};
  std::vector<DiffOpExpr> ppow{DiffOpExpr::identity(hbar)};
  for (int k = 1; k <= max_a; ++k) xpow.push_back(compose(X, xpow.back()));
  for (int k = 1; k <= max_b; ++k) ppow.push_back(compose(P, ppow.back()));

  // Weyl symbol x^a p^b <-> 2^-a sum_k C(a,k) X^(a-k) P^b X^k
  DiffOpExpr out(hbar);
  for (const auto& [e, c] : f.terms()) {
    Rational scale = Rational(1) / Rational(mpz_class(1) << e.x);
    DiffOpExpr sym(hbar);
    for (int k = 0; k <= e.x; ++k) {
      DiffOpExpr t = compose(xpow[e.x - k], compose(ppow[e.p], xpow[k]));
      sym = sym + CRat(Rational(binomial(e.x, k))) * t;
    }
    out = out + (c * CRat(scale)) * sym;
  }
  return out;
}

DiffOpExpr sandwich(const PolySymbol& f, const PolySymbol& g, const Rational& hbar) {
  return compose(bopp(f, BoppSide::Left, hbar), bopp(g, BoppSide::Right, hbar));
}

DiffOpExpr moyal_bracket(const PolySymbol& h, const Rational& hbar) {
  if (sgn(hbar) == 0) throw std::domain_error("Moyal bracket undefined at hbar = 0; use poisson_bracket");
  // 1/(i hbar) = -i/hbar
  const CRat k(Rational(0), Rational(-1 / hbar));
  return k * (bopp(h, BoppSide::Left, hbar) - bopp(h, BoppSide::Right, hbar));
}

DiffOpExpr poisson_bracket(const PolySymbol& h, const Rational& hbar) {
  DiffOpExpr::Terms t;
  const PolySymbol hx = h.dx(), hp = h.dp();
  for (const auto& [e, c] : hx.terms()) t[OpMonomial{e.x, e.p, 0, 1}] += c;
  for (const auto& [e, c] : hp.terms()) t[OpMonomial{e.x, e.p, 1, 0}] -= c;
  return DiffOpExpr(std::move(t), hbar);
}

PolySymbol ladder_scaled(Ladder l) {
  const CRat ip = l == Ladder::a ? CRat::i() : -CRat::i();
  return PolySymbol::x() + PolySymbol::monomial(0, 1, ip);
}

Rational ladder_pair_factor(const Rational& hbar) { return Rational(1) / (2 * hbar); }

PolySymbol ladder_star(Ladder l1, Ladder l2, const Rational& hbar) {
  return star_poly(ladder_scaled(l1), ladder_scaled(l2), hbar) * CRat(ladder_pair_factor(hbar));
}

DiffOpExpr ladder_sandwich(Ladder l, Ladder r, const Rational& hbar) {
  return CRat(ladder_pair_factor(hbar)) * sandwich(ladder_scaled(l), ladder_scaled(r), hbar);
}

DiffOpExpr ladder_left(Ladder l1, Ladder l2, const Rational& hbar) {
  return CRat(ladder_pair_factor(hbar)) *
         compose(bopp(ladder_scaled(l1), BoppSide::Left, hbar), bopp(ladder_scaled(l2), BoppSide::Left, hbar));
}

DiffOpExpr ladder_right(Ladder l1, Ladder l2, const Rational& hbar) {
  // W * l1 * l2 : l1 acts first from the right, then l2
  return CRat(ladder_pair_factor(hbar)) *
         compose(bopp(ladder_scaled(l2), BoppSide::Right, hbar), bopp(ladder_scaled(l1), BoppSide::Right, hbar));
}

}  // namespace wigner

#include <doctest.h>

#include "support.hpp"
#include "wigner/star.hpp"

using namespace wigner;
using testing::Rng;

namespace {

const PolySymbol X = PolySymbol::x();
const PolySymbol P = PolySymbol::p();
const CRat I = CRat::i();

DiffOpExpr op(int a, int b, int c, int d, const CRat& k, const Rational& hbar = 1) {
  return DiffOpExpr::monomial({a, b, c, d}, k, hbar);
}

PolySymbol oscillator() { return PolySymbol::monomial(2, 0, CRat(rat(1, 2))) + PolySymbol::monomial(0, 2, CRat(rat(1, 2))); }

// Sine-series form of the Moyal bracket, truncated where the derivatives of
// a polynomial H run out:
//   sum_{n odd} (-1)^((n-1)/2) (hbar/2)^(n-1) / n!
//       sum_k C(n,k) (-1)^k (d_x^(n-k) d_p^k H) d_p^(n-k) d_x^k W
DiffOpExpr sine_series(const PolySymbol& h, const Rational& hbar) {
  DiffOpExpr out(hbar);
  Rational half_pow = 1, fact = 1;
  for (int n = 1; n <= h.degree(); ++n) {
    fact *= n;
    if (n > 1) half_pow *= hbar / 2;
    if (n % 2 == 0) continue;
    const Rational sign = ((n - 1) / 2) % 2 == 0 ? 1 : -1;
    for (int k = 0; k <= n; ++k) {
      const Rational weight = sign * half_pow / fact * Rational(binomial(n, k)) * (k % 2 == 0 ? 1 : -1);
      const PolySymbol dh = h.dx(n - k).dp(k);
      for (const auto& [e, c] : dh.terms()) out = out + op(e.x, e.p, k, n - k, c * CRat(weight), hbar);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("star product of coordinates") {
  CHECK(star_poly(X, P, 1) == X * P + PolySymbol(CRat(0, rat(1, 2))));
  CHECK(star_poly(P, X, 1) == X * P - PolySymbol(CRat(0, rat(1, 2))));
  CHECK(star_poly(X, P, 0) == X * P);
  const PolySymbol f = PolySymbol::monomial(3, 1, 2);
  CHECK(star_poly(f, PolySymbol(CRat(1)), rat(1, 3)) == f);
  // a* a = (x^2 + p^2)/2 - 1/2
  CHECK(ladder_star(Ladder::a_star, Ladder::a, 1) == oscillator() - PolySymbol(CRat(rat(1, 2))));
  // [a, a*]_star = 1 for any hbar
  for (const Rational& h : {Rational(1), rat(1, 2), rat(3, 7)})
    CHECK(ladder_star(Ladder::a, Ladder::a_star, h) - ladder_star(Ladder::a_star, Ladder::a, h) == PolySymbol(CRat(1)));
}

TEST_CASE("star product is associative") {
  Rng rng(21);
  for (int k = 0; k < 30; ++k) {
    const PolySymbol f = testing::random_poly(rng, 4, 3), g = testing::random_poly(rng, 4, 3),
                     h = testing::random_poly(rng, 4, 3);
    const Rational hb = rng.coin() ? Rational(1) : rat(1, 3);
    CHECK(star_poly(f, star_poly(g, h, hb), hb) == star_poly(star_poly(f, g, hb), h, hb));
  }
}

TEST_CASE("conjugation reverses star products") {
  Rng rng(22);
  for (int k = 0; k < 30; ++k) {
    const PolySymbol f = testing::random_poly(rng, 4, 3), g = testing::random_poly(rng, 4, 3);
    CHECK(star_poly(f, g, 1).conj() == star_poly(g.conj(), f.conj(), 1));
  }
}

TEST_CASE("Bopp shifts") {
  CHECK(bopp(X, BoppSide::Left, 1) == op(1, 0, 0, 0, 1) + op(0, 0, 0, 1, CRat(0, rat(1, 2))));
  CHECK(bopp(P, BoppSide::Right, 1) == op(0, 1, 0, 0, 1) + op(0, 0, 1, 0, CRat(0, rat(1, 2))));
  CHECK(bopp(PolySymbol(CRat(5)), BoppSide::Left, 1) == CRat(5) * DiffOpExpr::identity());
  CHECK(bopp(PolySymbol(CRat(5)), BoppSide::Right, 1) == CRat(5) * DiffOpExpr::identity());
}

TEST_CASE("Bopp route agrees with the bidifferential series") {
  Rng rng(23);
  for (int k = 0; k < 60; ++k) {
    const PolySymbol f = testing::random_poly(rng, 4, 4), g = testing::random_poly(rng, 4, 4);
    const Rational hb = k % 3 == 0 ? rat(1, 2) : Rational(1);
    CHECK(bopp(f, BoppSide::Left, hb).apply(g) == star_poly(f, g, hb));
    CHECK(bopp(g, BoppSide::Right, hb).apply(f) == star_poly(f, g, hb));
  }
}

TEST_CASE("left and right Bopp operators commute") {
  Rng rng(24);
  for (int k = 0; k < 30; ++k) {
    const PolySymbol f = testing::random_poly(rng, 3, 3), g = testing::random_poly(rng, 3, 3);
    const DiffOpExpr l = bopp(f, BoppSide::Left, 1), r = bopp(g, BoppSide::Right, 1);
    CHECK(compose(l, r) == compose(r, l));
  }
}

TEST_CASE("sandwich") {
  CHECK(sandwich(PolySymbol(CRat(1)), PolySymbol(CRat(1)), rat(2, 3)) == DiffOpExpr::identity(rat(2, 3)));
  Rng rng(25);
  for (int k = 0; k < 30; ++k) {
    const PolySymbol f = testing::random_poly(rng, 3, 3), g = testing::random_poly(rng, 3, 3),
                     w = testing::random_poly(rng, 4, 4);
    CHECK(sandwich(f, g, 1).apply(w) == star_poly(star_poly(f, w, 1), g, 1));
  }
  // f * W * conj(f) maps real polynomials to real polynomials.
  for (int k = 0; k < 30; ++k) {
    const PolySymbol f = testing::random_poly(rng, 3, 3);
    PolySymbol w = testing::random_poly(rng, 4, 4);
    w = w + w.conj();
    const PolySymbol out = sandwich(f, f.conj(), 1).apply(w);
    CHECK(out == out.conj());
  }
}

TEST_CASE("Moyal and Poisson brackets") {
  const DiffOpExpr rotation = op(1, 0, 0, 1, 1) - op(0, 1, 1, 0, 1);
  CHECK(moyal_bracket(oscillator(), 1) == rotation);
  CHECK(poisson_bracket(oscillator()) == rotation);
  CHECK(moyal_bracket(PolySymbol(CRat(3)), rat(1, 2)).is_zero());
  CHECK(poisson_bracket(PolySymbol(CRat(3))).is_zero());
  const PolySymbol x4 = PolySymbol::monomial(4, 0);
  CHECK(moyal_bracket(x4, 1) == op(3, 0, 0, 1, 4) - op(1, 0, 0, 3, 1));
  CHECK(poisson_bracket(x4) == op(3, 0, 0, 1, 4));
  CHECK_THROWS_AS(moyal_bracket(x4, 0), std::domain_error);
}

TEST_CASE("Moyal bracket is the star commutator over i hbar") {
  Rng rng(26);
  for (int k = 0; k < 40; ++k) {
    const PolySymbol h = testing::random_poly(rng, 5, 4), f = testing::random_poly(rng, 5, 4);
    const Rational hb = k % 2 ? Rational(1) : rat(1, 5);
    const PolySymbol comm = star_poly(h, f, hb) - star_poly(f, h, hb);
    CHECK(moyal_bracket(h, hb).apply(f) * CRat(Rational(0), hb) == comm);
  }
}

TEST_CASE("Moyal bracket matches the sine series") {
  Rng rng(27);
  for (int k = 0; k < 40; ++k) {
    const PolySymbol h = testing::random_poly(rng, 6, 4);
    const Rational hb = k % 2 ? Rational(1) : rat(2, 3);
    CHECK(moyal_bracket(h, hb) == sine_series(h, hb));
  }
}

TEST_CASE("Moyal bracket never has a derivative-free term") {
  Rng rng(28);
  for (int k = 0; k < 100; ++k) {
    PolySymbol h = testing::random_poly(rng, 6, 5);
    h = h + h.conj();
    const DiffOpExpr m = moyal_bracket(h, 1);
    for (const auto& [mono, c] : m.terms()) {
      CHECK(mono.order() >= 1);
      CHECK(c.is_real());
    }
  }
}

TEST_CASE("classical limit scales as hbar squared") {
  const PolySymbol h = PolySymbol::monomial(4, 0) + oscillator();
  const DiffOpExpr d1 = moyal_bracket(h, 1) - poisson_bracket(h, 1);
  CHECK(d1 == op(1, 0, 0, 3, -1));
  for (const Rational& hb : {rat(1, 2), rat(1, 10), rat(1, 100)}) {
    const DiffOpExpr d = moyal_bracket(h, hb) - poisson_bracket(h, hb);
    CHECK(d == CRat(hb * hb) * DiffOpExpr(d1.terms(), hb));
  }
}

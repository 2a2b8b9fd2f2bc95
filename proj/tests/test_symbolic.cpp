#include <doctest.h>

#include "support.hpp"
#include "wigner/divergence.hpp"

using namespace wigner;
using testing::Rng;

namespace {

OpMonomial mono(int a, int b, int c, int d) { return {a, b, c, d}; }

// Independent route to a composition: apply both operators to a probe
// polynomial (E1 o E2)(f) = E1(E2(f)).
PolySymbol probe(Rng& rng) { return testing::random_poly(rng, 6, 6); }

}  // namespace

TEST_CASE("rationals stay canonical") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(to_string(rat(-6, 4)) == "-3/2");
  CHECK(to_string(rat(4, 2)) == "2");
  CHECK_THROWS_AS(rat(1, 0), std::domain_error);
  CHECK(parse_rational("-7/21") == rat(-1, 3));
}

TEST_CASE("complex rationals") {
  const CRat i = CRat::i();
  CHECK(i * i == CRat(-1));
  CHECK((CRat(rat(1, 2), 1) * CRat(rat(1, 2), -1)) == CRat(rat(5, 4)));
  CHECK(CRat(3, 4) / CRat(3, 4) == CRat(1));
  CHECK(to_string(CRat(1, -2)) == "1 - 2 i");
  CHECK(to_string(CRat(0, rat(1, 2))) == "1/2 i");
}

TEST_CASE("polynomial arithmetic") {
  const PolySymbol x = PolySymbol::x(), p = PolySymbol::p();
  const PolySymbol f = (x + p) * (x - p);
  CHECK(f == PolySymbol::monomial(2, 0) - PolySymbol::monomial(0, 2));
  CHECK(f.dx() == PolySymbol::monomial(1, 0, CRat(2)));
  CHECK(f.dp(2) == PolySymbol(CRat(-2)));
  CHECK((f - f).is_zero());
  CHECK(f.degree() == 2);
  CHECK(falling(5, 2) == 20);
  CHECK(falling(2, 3) == 0);
  CHECK(binomial(6, 3) == 20);
}

TEST_CASE("derivatives do not commute with multiplication") {
  // d_x o x = x d_x + 1
  const DiffOpExpr e = compose(DiffOpExpr::dx(), DiffOpExpr::multiply(PolySymbol::x()));
  CHECK(e == DiffOpExpr::monomial(mono(1, 0, 1, 0), 1) + DiffOpExpr::identity());
  // d_x^2 o x^2 = x^2 d_x^2 + 4 x d_x + 2
  const DiffOpExpr e2 = compose(DiffOpExpr::monomial(mono(0, 0, 2, 0), 1), DiffOpExpr::monomial(mono(2, 0, 0, 0), 1));
  CHECK(e2 == DiffOpExpr::monomial(mono(2, 0, 2, 0), 1) + DiffOpExpr::monomial(mono(1, 0, 1, 0), 4) +
                  DiffOpExpr::monomial(mono(0, 0, 0, 0), 2));
}

TEST_CASE("compose agrees with sequential application") {
  Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    const DiffOpExpr e1 = testing::random_diffop(rng, 1), e2 = testing::random_diffop(rng, 1);
    const PolySymbol f = probe(rng);
    CHECK(compose(e1, e2).apply(f) == e1.apply(e2.apply(f)));
  }
}

TEST_CASE("compose is associative and bilinear") {
  Rng rng(12);
  for (int k = 0; k < 40; ++k) {
    const DiffOpExpr a = testing::random_diffop(rng, 1, 2, 2, 3), b = testing::random_diffop(rng, 1, 2, 2, 3),
                     c = testing::random_diffop(rng, 1, 2, 2, 3);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    const CRat s = rng.crat();
    CHECK(compose(a, s * b + c) == s * compose(a, b) + compose(a, c));
  }
}

TEST_CASE("adjoint is an involution and reverses composition") {
  Rng rng(13);
  for (int k = 0; k < 60; ++k) {
    const DiffOpExpr a = testing::random_diffop(rng, 1), b = testing::random_diffop(rng, 1);
    CHECK(adjoint(adjoint(a)) == a);
    CHECK(adjoint(compose(a, b)) == compose(adjoint(b), adjoint(a)));
    const CRat s = rng.crat();
    CHECK(adjoint(s * a + b) == s * adjoint(a) + adjoint(b));
  }
  CHECK(adjoint(DiffOpExpr::dx()) == -DiffOpExpr::dx());
  CHECK(adjoint(DiffOpExpr::laplacian()) == DiffOpExpr::laplacian());
}

TEST_CASE("mixing hbar values is rejected") {
  CHECK_THROWS_AS(compose(DiffOpExpr::dx(1), DiffOpExpr::dx(2)), UnitMismatch);
  CHECK_THROWS_AS(DiffOpExpr::dx(1) + DiffOpExpr::dp(rat(1, 2)), UnitMismatch);
  CHECK_FALSE(DiffOpExpr::identity(1) == DiffOpExpr::identity(2));
}

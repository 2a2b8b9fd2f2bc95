#include <doctest.h>

#include "support.hpp"
#include "wigner/identities.hpp"
#include "wigner/star.hpp"

using namespace wigner;
using testing::Rng;

namespace {

const PolySymbol X = PolySymbol::x();
const PolySymbol P = PolySymbol::p();

PolySymbol poly(std::initializer_list<std::tuple<int, int, Rational>> terms) {
  PolySymbol f;
  for (const auto& [a, b, c] : terms) f += PolySymbol::monomial(a, b, CRat(c));
  return f;
}

DiffOpExpr mul(const PolySymbol& f, const Rational& hbar = 1) { return DiffOpExpr::multiply(f, hbar); }

// Adjoint applied to 1: the obstruction computed without the reduction.
PolySymbol oracle_residual(const DiffOpExpr& e) { return adjoint(e).apply(PolySymbol(CRat(1))); }

DiffOpExpr reassemble(const Decomposition& d, const Rational& hbar) {
  return d.current.divergence() + mul(d.residual, hbar);
}

}  // namespace

TEST_CASE("residual of simple operators") {
  CHECK(residual(CRat(rat(3, 2)) * DiffOpExpr::identity()) == PolySymbol(CRat(rat(3, 2))));
  CHECK(residual(DiffOpExpr::dx()).is_zero());
  // x d_x = d_x o x - 1
  CHECK(residual(DiffOpExpr::monomial({1, 0, 1, 0}, 1)) == PolySymbol(CRat(-1)));
  CHECK(residual(ladder_sandwich(Ladder::a_star, Ladder::a, 1)) == poly({{0, 0, rat(1, 2)}, {2, 0, rat(1, 2)}, {0, 2, rat(1, 2)}}));
  CHECK(residual(named_generator(Generator::photon_add)) == poly({{0, 0, rat(1, 2)}, {2, 0, rat(1, 2)}, {0, 2, rat(1, 2)}}));
  const PolySymbol h = PolySymbol::monomial(4, 0) + poly({{2, 0, rat(1, 2)}, {0, 2, rat(1, 2)}});
  CHECK(residual(moyal_bracket(h, 1)).is_zero());
}

TEST_CASE("residual annihilates derivatives of anything") {
  Rng rng(31);
  for (int k = 0; k < 50; ++k) {
    const DiffOpExpr a = testing::random_diffop(rng, 1);
    CHECK(residual(compose(DiffOpExpr::dx(), a)).is_zero());
    CHECK(residual(compose(DiffOpExpr::dp(), a)).is_zero());
    const PolySymbol r = testing::random_poly(rng, 4, 4);
    CHECK(residual(mul(r)) == r);
  }
}

TEST_CASE("residual is linear") {
  Rng rng(32);
  for (int k = 0; k < 50; ++k) {
    const DiffOpExpr e1 = testing::random_diffop(rng, 1), e2 = testing::random_diffop(rng, 1);
    const CRat al = rng.crat(), be = rng.crat();
    CHECK(residual(al * e1 + be * e2) == residual(e1) * al + residual(e2) * be);
  }
}

TEST_CASE("decompose reassembles exactly and agrees with the adjoint oracle") {
  Rng rng(33);
  for (int k = 0; k < 200; ++k) {
    const Rational hb = k % 4 == 0 ? rat(1, 3) : Rational(1);
    const DiffOpExpr e = testing::random_diffop(rng, hb, 4, 4, 6);
    const Decomposition d = decompose(e);
    CHECK(d.residual == oracle_residual(e));
    CHECK(reassemble(d, hb) == e);
    CHECK(is_divergence(e) == d.residual.is_zero());
  }
}

TEST_CASE("decompose edge cases") {
  const Decomposition zero = decompose(DiffOpExpr());
  CHECK(zero.residual.is_zero());
  CHECK(zero.current.jx.is_zero());
  CHECK(zero.current.jp.is_zero());

  const Decomposition p2 = decompose(mul(PolySymbol::monomial(0, 2)));
  CHECK(p2.residual == PolySymbol::monomial(0, 2));
  CHECK(p2.current.jx.is_zero());
  CHECK(p2.current.jp.is_zero());

  CHECK_FALSE(is_divergence(DiffOpExpr::identity()));
  CHECK(is_divergence(moyal_bracket(PolySymbol::monomial(3, 2, 7), 1)));
}

TEST_CASE("named generators reproduce the printed normal forms") {
  const DiffOpExpr lap = DiffOpExpr::laplacian();
  // (x^2 + p^2 - 1) W - 1/4 Lap W
  CHECK(named_generator(Generator::number_anticommutator) ==
        mul(poly({{2, 0, 1}, {0, 2, 1}, {0, 0, -1}})) + CRat(rat(-1, 4)) * lap);
  // (x^2 + p^2 + 1) W - 1/4 Lap W
  CHECK(named_generator(Generator::antinumber_anticommutator) ==
        mul(poly({{2, 0, 1}, {0, 2, 1}, {0, 0, 1}})) + CRat(rat(-1, 4)) * lap);
  // 1/2 (p^2 + x^2 + 1) - 1/2 (d_x o x + d_p o p) + 1/8 Lap
  const DiffOpExpr div_xp = compose(DiffOpExpr::dx(), mul(X)) + compose(DiffOpExpr::dp(), mul(P));
  CHECK(named_generator(Generator::photon_add) ==
        mul(poly({{2, 0, rat(1, 2)}, {0, 2, rat(1, 2)}, {0, 0, rat(1, 2)}})) + CRat(rat(-1, 2)) * div_xp +
            CRat(rat(1, 8)) * lap);
  CHECK(named_generator(Generator::photon_remove) ==
        mul(poly({{2, 0, rat(1, 2)}, {0, 2, rat(1, 2)}, {0, 0, rat(-1, 2)}})) + CRat(rat(1, 2)) * div_xp +
            CRat(rat(1, 8)) * lap);
  CHECK(named_generator(Generator::lindblad_up) == -div_xp + CRat(rat(1, 2)) * lap);
  CHECK(named_generator(Generator::lindblad_down) == div_xp + CRat(rat(1, 2)) * lap);
  CHECK(named_generator("lindblad_down", rat(1, 2)) == named_generator(Generator::lindblad_down, rat(1, 2)));
  CHECK_THROWS_AS(named_generator("photon_juggle"), std::invalid_argument);
  for (Generator g : kAllGenerators) CHECK(generator_from_name(to_string(g)) == g);
}

TEST_CASE("sum and difference of addition and removal are not divergences") {
  const DiffOpExpr add = named_generator(Generator::photon_add), rem = named_generator(Generator::photon_remove);
  CHECK_FALSE(is_divergence(add + rem));
  CHECK_FALSE(is_divergence(add - rem));
  CHECK(residual(add - rem) == PolySymbol(CRat(1)));
}

TEST_CASE("Lindblad currents") {
  const CurrentSymbol jm = j_lindblad(LindbladSign::minus), jp = j_lindblad(LindbladSign::plus);
  const DiffOpExpr half_dx = CRat(rat(1, 2)) * DiffOpExpr::dx(), half_dp = CRat(rat(1, 2)) * DiffOpExpr::dp();
  CHECK(jm.jx == mul(X) - half_dx);
  CHECK(jm.jp == mul(P) - half_dp);
  CHECK(jp.jx == -mul(X) - half_dx);
  CHECK(jp.jp == -mul(P) - half_dp);
  CHECK(-jm.divergence() == named_generator(Generator::lindblad_up));
  CHECK(-jp.divergence() == named_generator(Generator::lindblad_down));
  CHECK(jm.divergence() + jp.divergence() == -DiffOpExpr::laplacian());
  CHECK(residual(jm.divergence()).is_zero());
  CHECK(residual(jp.divergence()).is_zero());
  // Canonical reduction lands on the printed representative.
  CHECK(-decompose(named_generator(Generator::lindblad_up)).current.jx == jm.jx);
  CHECK(-decompose(named_generator(Generator::lindblad_down)).current.jp == jp.jp);
}

TEST_CASE("identity suite passes for several hbar") {
  for (const Rational& hb : {Rational(1), rat(1, 2), rat(7, 3)}) {
    const auto suite = run_identity_suite(hb);
    CHECK(suite.size() >= 12);
    for (const IdentityCheck& c : suite) {
      INFO(c.name << " at hbar = " << to_string(hb));
      CHECK(c.passed);
    }
  }
}

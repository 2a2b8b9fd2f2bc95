#include "wigner/identities.hpp"

#include "wigner/star.hpp"

namespace wigner {

namespace reference {

namespace {
DiffOpExpr mul(const PolySymbol& f, const Rational& hbar) { return DiffOpExpr::multiply(f, hbar); }
PolySymbol r2() { return PolySymbol::monomial(2, 0) + PolySymbol::monomial(0, 2); }
}  // namespace

DiffOpExpr div_xp(const Rational& hbar) {
  return compose(DiffOpExpr::dx(hbar), mul(PolySymbol::x(), hbar)) +
         compose(DiffOpExpr::dp(hbar), mul(PolySymbol::p(), hbar));
}

PolySymbol photon_add_residual(const Rational& hbar) {
  return r2() * CRat(Rational(1 / (2 * hbar))) + PolySymbol(CRat(rat(1, 2)));
}

PolySymbol photon_remove_residual(const Rational& hbar) {
  return r2() * CRat(Rational(1 / (2 * hbar))) - PolySymbol(CRat(rat(1, 2)));
}

// (r^2/(2 hbar) + 1/2) W - 1/2 div(x W, p W) + (hbar/8) Lap W
DiffOpExpr photon_add(const Rational& hbar) {
  return mul(photon_add_residual(hbar), hbar) + CRat(rat(-1, 2)) * div_xp(hbar) +
         CRat(Rational(hbar / 8)) * DiffOpExpr::laplacian(hbar);
}

DiffOpExpr photon_remove(const Rational& hbar) {
  return mul(photon_remove_residual(hbar), hbar) + CRat(rat(1, 2)) * div_xp(hbar) +
         CRat(Rational(hbar / 8)) * DiffOpExpr::laplacian(hbar);
}

// (r^2/hbar - 1) W - (hbar/4) Lap W
DiffOpExpr number_anticommutator(const Rational& hbar) {
  return mul(r2() * CRat(Rational(1 / hbar)) - PolySymbol(CRat(1)), hbar) +
         CRat(Rational(-hbar / 4)) * DiffOpExpr::laplacian(hbar);
}

DiffOpExpr antinumber_anticommutator(const Rational& hbar) {
  return mul(r2() * CRat(Rational(1 / hbar)) + PolySymbol(CRat(1)), hbar) +
         CRat(Rational(-hbar / 4)) * DiffOpExpr::laplacian(hbar);
}

DiffOpExpr lindblad_up(const Rational& hbar) {
  return -div_xp(hbar) + CRat(Rational(hbar / 2)) * DiffOpExpr::laplacian(hbar);
}

DiffOpExpr lindblad_down(const Rational& hbar) {
  return div_xp(hbar) + CRat(Rational(hbar / 2)) * DiffOpExpr::laplacian(hbar);
}

DiffOpExpr oscillator_current_divergence(const Rational& hbar) {
  return compose(DiffOpExpr::dx(hbar), mul(PolySymbol::p(), hbar)) -
         compose(DiffOpExpr::dp(hbar), mul(PolySymbol::x(), hbar));
}

}  // namespace reference

namespace {

IdentityCheck check_identity(std::string name, const DiffOpExpr& lhs, const DiffOpExpr& rhs) {
  IdentityCheck c;
  c.name = std::move(name);
  c.expect = Expectation::identity;
  c.difference = lhs - rhs;
  c.passed = c.difference.is_zero();
  return c;
}

IdentityCheck check_divergence(std::string name, const DiffOpExpr& e) {
  IdentityCheck c;
  c.name = std::move(name);
  c.expect = Expectation::divergence;
  c.difference = e;
  Decomposition d = decompose(e);
  c.residual = d.residual;
  c.current = -d.current;
  c.passed = d.residual.is_zero() && residual(e).is_zero() && d.current.divergence() == e;
  return c;
}

IdentityCheck check_obstruction(std::string name, const DiffOpExpr& e, const PolySymbol* expected) {
  IdentityCheck c;
  c.name = std::move(name);
  c.expect = Expectation::not_divergence;
  c.difference = e;
  c.residual = residual(e);
  c.passed = !c.residual.is_zero() && !is_divergence(e) && (expected == nullptr || c.residual == *expected);
  return c;
}

}  // namespace

std::vector<IdentityCheck> run_identity_suite(const Rational& hbar) {
  std::vector<IdentityCheck> out;
  const auto gen = [&](Generator g) { return named_generator(g, hbar); };

  out.push_back(check_identity("photon_add_split", gen(Generator::photon_add), reference::photon_add(hbar)));
  out.push_back(check_identity("photon_remove_split", gen(Generator::photon_remove), reference::photon_remove(hbar)));

  {
    // (1/(i hbar)) [a~ a, W]_star = -(1/hbar) div(p W, -x W)
    const CRat inv_ihbar(Rational(0), Rational(-1 / hbar));
    auto c = check_identity("number_commutator_classical", inv_ihbar * gen(Generator::number_commutator),
                            CRat(Rational(-1 / hbar)) * reference::oscillator_current_divergence(hbar));
    c.note = "normalized by 1/(i hbar): the oscillator flows along the classical current (p W, -x W)";
    out.push_back(std::move(c));
  }
  {
    IdentityCheck c;
    c.name = "number_commutator_literal";
    c.expect = Expectation::mismatch;
    c.difference = gen(Generator::number_commutator) - reference::oscillator_current_divergence(hbar);
    c.passed = !c.difference.is_zero();
    c.note = "unnormalized star commutator equals -i div(p W, -x W), not div(p W, -x W)";
    out.push_back(std::move(c));
  }

  out.push_back(check_identity("number_anticommutator_form", gen(Generator::number_anticommutator),
                               reference::number_anticommutator(hbar)));
  out.push_back(check_identity("antinumber_anticommutator_form", gen(Generator::antinumber_anticommutator),
                               reference::antinumber_anticommutator(hbar)));
  out.push_back(check_identity("lindblad_up_form", gen(Generator::lindblad_up), reference::lindblad_up(hbar)));
  out.push_back(check_identity("lindblad_down_form", gen(Generator::lindblad_down), reference::lindblad_down(hbar)));

  {
    IdentityCheck c;
    c.name = "lindblad_current_pairing";
    c.expect = Expectation::identity;
    const DiffOpExpr up = -j_lindblad(LindbladSign::minus, hbar).divergence() - gen(Generator::lindblad_up);
    const DiffOpExpr down = -j_lindblad(LindbladSign::plus, hbar).divergence() - gen(Generator::lindblad_down);
    c.difference = up + down;
    c.passed = up.is_zero() && down.is_zero();
    c.note = "-div J_minus = lindblad_up, -div J_plus = lindblad_down";
    out.push_back(std::move(c));
  }
  {
    IdentityCheck c;
    c.name = "lindblad_canonical_gauge";
    c.expect = Expectation::identity;
    const CurrentSymbol up = -decompose(gen(Generator::lindblad_up)).current;
    const CurrentSymbol down = -decompose(gen(Generator::lindblad_down)).current;
    const CurrentSymbol jm = j_lindblad(LindbladSign::minus, hbar);
    const CurrentSymbol jp = j_lindblad(LindbladSign::plus, hbar);
    c.difference = (up.jx - jm.jx) + (up.jp - jm.jp) + (down.jx - jp.jx) + (down.jp - jp.jp);
    c.passed = up.jx == jm.jx && up.jp == jm.jp && down.jx == jp.jx && down.jp == jp.jp;
    c.note = "canonical reduction reproduces J_minus and J_plus term for term";
    out.push_back(std::move(c));
  }

  const PolySymbol add_res = reference::photon_add_residual(hbar);
  const PolySymbol rem_res = reference::photon_remove_residual(hbar);
  out.push_back(check_obstruction("photon_add", gen(Generator::photon_add), &add_res));
  out.push_back(check_obstruction("photon_remove", gen(Generator::photon_remove), &rem_res));
  out.push_back(check_obstruction("add_plus_remove", gen(Generator::photon_add) + gen(Generator::photon_remove), nullptr));
  out.push_back(check_obstruction("add_minus_remove", gen(Generator::photon_add) - gen(Generator::photon_remove), nullptr));
  out.push_back(check_obstruction("number_anticommutator", gen(Generator::number_anticommutator), nullptr));
  out.push_back(check_obstruction("antinumber_anticommutator", gen(Generator::antinumber_anticommutator), nullptr));

  out.push_back(check_divergence("lindblad_up", gen(Generator::lindblad_up)));
  out.push_back(check_divergence("lindblad_down", gen(Generator::lindblad_down)));
  out.push_back(check_divergence("number_commutator", gen(Generator::number_commutator)));
  {
    const PolySymbol h = PolySymbol::monomial(4, 0) + PolySymbol::monomial(2, 0, CRat(rat(1, 2))) +
                         PolySymbol::monomial(0, 2, CRat(rat(1, 2)));
    out.push_back(check_divergence("moyal_quartic_oscillator", moyal_bracket(h, hbar)));

    // moyal - poisson scales exactly as hbar^2
    IdentityCheck c;
    c.name = "classical_limit_hbar_squared";
    c.expect = Expectation::identity;
    const DiffOpExpr base = moyal_bracket(h, 1) - poisson_bracket(h, 1);
    c.passed = !base.is_zero();
    for (const Rational& hb : {Rational(1), rat(1, 2), rat(1, 10)}) {
      const DiffOpExpr diff = moyal_bracket(h, hb) - poisson_bracket(h, hb);
      const DiffOpExpr scaled(base.terms(), hb);
      const DiffOpExpr gap = diff - CRat(Rational(hb * hb)) * scaled;
      if (!gap.is_zero()) {
        c.passed = false;
        c.difference = gap;
      }
    }
    c.note = "moyal - poisson coefficients at hbar = 1, 1/2, 1/10 in ratio 1 : 1/4 : 1/100";
    if (c.passed) c.difference = DiffOpExpr(hbar);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace wigner

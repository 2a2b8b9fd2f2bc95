#include "wigner/divergence.hpp"

#include <stdexcept>
#include <string>

#include "wigner/star.hpp"

namespace wigner {

DiffOpExpr CurrentSymbol::divergence() const {
  return compose(DiffOpExpr::dx(jx.hbar()), jx) + compose(DiffOpExpr::dp(jp.hbar()), jp);
}

PolySymbol residual(const DiffOpExpr& e) {
  // E^T 1 = sum (-1)^(c+d) d_x^c d_p^d (x^a p^b)
  PolySymbol out;
  for (const auto& [m, c] : e.terms()) {
    if (m.c > m.a || m.d > m.b) continue;
    Rational w(falling(m.a, m.c) * falling(m.b, m.d));
    if (m.order() % 2 == 1) w = -w;
    out += PolySymbol::monomial(m.a - m.c, m.b - m.d, c * CRat(w));
  }
  return out;
}

Decomposition decompose(const DiffOpExpr& e) {
  const Rational& hbar = e.hbar();
  DiffOpExpr::Terms jx, jp;
  PolySymbol::Terms rest;

  // x^a p^b d_x^c d_p^d = d_x o (x^a p^b d_x^(c-1) d_p^d) - a x^(a-1) p^b d_x^(c-1) d_p^d
  // Each peel lowers a+c (or b+d), so the worklist drains.
  DiffOpExpr::Terms work = e.terms();
  while (!work.empty()) {
    auto node = work.extract(std::prev(work.end()));
    const OpMonomial m = node.key();
    const CRat c = node.mapped();
    if (c.is_zero()) continue;
    if (m.c >= 1) {
      jx[OpMonomial{m.a, m.b, m.c - 1, m.d}] += c;
      if (m.a > 0) work[OpMonomial{m.a - 1, m.b, m.c - 1, m.d}] -= c * CRat(Rational(m.a));
    } else if (m.d >= 1) {
      jp[OpMonomial{m.a, m.b, 0, m.d - 1}] += c;
      if (m.b > 0) work[OpMonomial{m.a, m.b - 1, 0, m.d - 1}] -= c * CRat(Rational(m.b));
    } else {
      rest[Exponents{m.a, m.b}] += c;
    }
  }
  return Decomposition{CurrentSymbol{DiffOpExpr(std::move(jx), hbar), DiffOpExpr(std::move(jp), hbar)},
                       PolySymbol(std::move(rest))};
}

bool is_divergence(const DiffOpExpr& e) { return residual(e).is_zero(); }

std::string_view to_string(Generator g) {
  switch (g) {
    case Generator::photon_add: return "photon_add";
    case Generator::photon_remove: return "photon_remove";
    case Generator::number_commutator: return "number_commutator";
    case Generator::number_anticommutator: return "number_anticommutator";
    case Generator::antinumber_anticommutator: return "antinumber_anticommutator";
    case Generator::lindblad_up: return "lindblad_up";
    case Generator::lindblad_down: return "lindblad_down";
  }
  return "?";
}

Generator generator_from_name(std::string_view name) {
  for (Generator g : kAllGenerators)
    if (to_string(g) == name) return g;
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

DiffOpExpr named_generator(Generator g, const Rational& hbar) {
  using L = Ladder;
  switch (g) {
    case Generator::photon_add: return ladder_sandwich(L::a_star, L::a, hbar);
    case Generator::photon_remove: return ladder_sandwich(L::a, L::a_star, hbar);
    case Generator::number_commutator:
      return ladder_left(L::a_star, L::a, hbar) - ladder_right(L::a_star, L::a, hbar);
    case Generator::number_anticommutator:
      return ladder_left(L::a_star, L::a, hbar) + ladder_right(L::a_star, L::a, hbar);
    case Generator::antinumber_anticommutator:
      return ladder_left(L::a, L::a_star, hbar) + ladder_right(L::a, L::a_star, hbar);
    case Generator::lindblad_up:
      return scale_and_add(CRat(2), named_generator(Generator::photon_add, hbar), CRat(-1),
                           named_generator(Generator::antinumber_anticommutator, hbar));
    case Generator::lindblad_down:
      return scale_and_add(CRat(2), named_generator(Generator::photon_remove, hbar), CRat(-1),
                           named_generator(Generator::number_anticommutator, hbar));
  }
  throw std::invalid_argument("unknown generator");
}

DiffOpExpr named_generator(std::string_view name, const Rational& hbar) {
  return named_generator(generator_from_name(name), hbar);
}

CurrentSymbol j_lindblad(LindbladSign sign, const Rational& hbar) {
  const CRat s = sign == LindbladSign::minus ? CRat(1) : CRat(-1);
  const CRat diff(Rational(-hbar / 2));
  DiffOpExpr jx = DiffOpExpr::monomial({1, 0, 0, 0}, s, hbar) + DiffOpExpr::monomial({0, 0, 1, 0}, diff, hbar);
  DiffOpExpr jp = DiffOpExpr::monomial({0, 1, 0, 0}, s, hbar) + DiffOpExpr::monomial({0, 0, 0, 1}, diff, hbar);
  return {std::move(jx), std::move(jp)};
}

}  // namespace wigner

#pragma once

// Shared generators and oracles for the test binaries. Generators are
// hand-rolled on a fixed-seed mt19937_64 so every run sees the same cases.

#include <cmath>
#include <random>
#include <vector>

#include "wigner/diffop.hpp"
#include "wigner/dsl.hpp"
#include "wigner/grid.hpp"

namespace testing {

using namespace wigner;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  bool coin(double p = 0.5) { return real(0.0, 1.0) < p; }
  Rational rational(int num = 5, int den = 4) {
    Rational q(uniform(-num, num), uniform(1, den));
    q.canonicalize();
    return q;
  }
  CRat crat() { return coin(0.7) ? CRat(rational()) : CRat(rational(), rational()); }

 private:
  std::mt19937_64 eng_;
};

inline PolySymbol random_poly(Rng& rng, int max_degree, int max_terms) {
  PolySymbol f;
  const int n = rng.uniform(1, max_terms);
  for (int k = 0; k < n; ++k) {
    const int a = rng.uniform(0, max_degree);
    const int b = rng.uniform(0, max_degree - a);
    f += PolySymbol::monomial(a, b, rng.crat());
  }
  return f;
}

inline DiffOpExpr random_diffop(Rng& rng, const Rational& hbar, int max_degree = 3, int max_order = 3,
                                int max_terms = 5, bool real_coefficients = false) {
  DiffOpExpr e(hbar);
  const int n = rng.uniform(1, max_terms);
  for (int k = 0; k < n; ++k) {
    OpMonomial m;
    m.a = rng.uniform(0, max_degree);
    m.b = rng.uniform(0, max_degree - m.a);
    m.c = rng.uniform(0, max_order);
    m.d = rng.uniform(0, max_order - m.c);
    e = e + DiffOpExpr::monomial(m, real_coefficients ? CRat(rng.rational()) : rng.crat(), hbar);
  }
  return e;
}

// d_x^c d_p^d [q(x, p) exp(-(x - x0)^2 / s - (p - p0)^2 / s)] = Q_cd(x, p) exp(...), built
// symbolically from d(Q g) = (dQ + Q d(log g)) g.
struct GaussianTest {
  PolySymbol q;
  double x0 = 0.0, p0 = 0.0;
  // Exact in x0, p0 only through the shifted coordinates; the test uses a
  // centred envelope of width s = 1.
  PolySymbol derivative_factor(int c, int d) const {
    PolySymbol f = q;
    const PolySymbol two_x = PolySymbol::monomial(1, 0, CRat(2));
    const PolySymbol two_p = PolySymbol::monomial(0, 1, CRat(2));
    for (int k = 0; k < c; ++k) f = f.dx() - two_x * f;
    for (int k = 0; k < d; ++k) f = f.dp() - two_p * f;
    return f;
  }
  double envelope(double x, double p) const { return std::exp(-x * x - p * p); }
  cplx value(double x, double p) const { return q.evaluate(x, p) * envelope(x, p); }

  // E applied to the test function, from the closed form. The derivative
  // factors are expanded once, then evaluated pointwise.
  struct Applied {
    PolySymbol poly;
    const GaussianTest* t;
    cplx operator()(double x, double p) const { return poly.evaluate(x, p) * t->envelope(x, p); }
  };
  Applied prepare(const DiffOpExpr& e) const {
    PolySymbol total;
    for (const auto& [m, c] : e.terms()) total += PolySymbol::monomial(m.a, m.b, c) * derivative_factor(m.c, m.d);
    return {total, this};
  }
  cplx apply(const DiffOpExpr& e, double x, double p) const { return prepare(e)(x, p); }
};

inline WignerField sample(const PhaseSpaceGrid& g, const auto& f) {
  WignerField w(g, "sample");
  for (int j = 0; j < g.np; ++j)
    for (int i = 0; i < g.nx; ++i) w.at(i, j) = f(g.x(i), g.p(j));
  return w;
}

// Random well-formed DSL expression: every additive term carries exactly one
// W and an even number of ladder symbols.
class ExprGen {
 public:
  explicit ExprGen(Rng& rng) : rng_(rng) {}

  dsl::NodePtr expr(int depth) {
    dsl::NodePtr e = term(depth);
    const int extra = rng_.uniform(0, 2);
    for (int k = 0; k < extra; ++k)
      e = dsl::make_binary(rng_.coin() ? dsl::Node::Kind::Sum : dsl::Node::Kind::Diff, e, term(depth));
    return e;
  }

 private:
  using K = dsl::Node::Kind;

  dsl::NodePtr ladder() { return dsl::make_symbol(rng_.coin() ? dsl::Symbol::a : dsl::Symbol::a_star); }

  dsl::NodePtr w_free_factor() {
    switch (rng_.uniform(0, 5)) {
      case 0: return dsl::make_scalar(abs(rng_.rational(7, 5)));
      case 1: return dsl::make_symbol(dsl::Symbol::x);
      case 2: return dsl::make_symbol(dsl::Symbol::p);
      case 3: return dsl::make_symbol(dsl::Symbol::i);
      case 4: return dsl::make_symbol(dsl::Symbol::hbar);
      default: return dsl::make_pow(dsl::make_symbol(rng_.coin() ? dsl::Symbol::x : dsl::Symbol::p), rng_.uniform(2, 3));
    }
  }

  // L1 * ... * W * ... * Rk with an even ladder count.
  dsl::NodePtr sandwich() {
    int left = rng_.uniform(0, 2), right = rng_.uniform(0, 2);
    if ((left + right) % 2 == 1) {
      if (left > 0)
        --left;
      else
        ++right;
    }
    dsl::NodePtr e;
    for (int k = 0; k < left; ++k) e = e ? dsl::make_binary(K::Star, e, ladder()) : ladder();
    e = e ? dsl::make_binary(K::Star, e, dsl::make_w()) : dsl::make_w();
    for (int k = 0; k < right; ++k) e = dsl::make_binary(K::Star, e, ladder());
    return e;
  }

  dsl::NodePtr term(int depth) {
    const int choice = rng_.uniform(0, depth > 0 ? 6 : 2);
    switch (choice) {
      case 0: return sandwich();
      case 1: return dsl::make_binary(K::Point, w_free_factor(), sandwich());
      case 2: return dsl::make_unary(K::Neg, sandwich());
      case 3: return dsl::make_unary(K::Dx, expr(depth - 1));
      case 4: return dsl::make_unary(rng_.coin() ? K::Dp : K::Lap, expr(depth - 1));
      case 5: return dsl::make_binary(K::Point, w_free_factor(), expr(depth - 1));
      default: return dsl::make_binary(K::Star, dsl::make_binary(K::Star, ladder(), expr(depth - 1)), ladder());
    }
  }

  Rng& rng_;
};

}  // namespace testing

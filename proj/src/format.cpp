#include <algorithm>
#include <vector>

#include "wigner/dsl.hpp"

namespace wigner::dsl {

namespace {

// Graded order: lower total degree first, then descending lexicographic.
template <class Key>
bool graded_before(const Key& l, int dl, const Key& r, int dr) {
  if (dl != dr) return dl < dr;
  return r < l;
}

std::string power(const char* sym, int k) {
  if (k == 0) return "";
  return k == 1 ? std::string(sym) : std::string(sym) + "^" + std::to_string(k);
}

std::string poly_factors(int a, int b) {
  std::string s = power("x", a);
  const std::string ps = power("p", b);
  if (!s.empty() && !ps.empty()) s += " . ";
  return s + ps;
}

// Appends "coef body" to out, choosing the joining sign. An empty body means
// the coefficient stands alone.
void append_term(std::string& out, const CRat& c, const std::string& body) {
  const bool first = out.empty();
  bool negative = false;
  std::string coef;
  if (c.is_real()) {
    negative = sgn(c.re()) < 0;
    const Rational mag = abs(c.re());
    if (mag != 1 || body.empty()) coef = to_string(mag);
  } else if (c.is_imaginary()) {
    negative = sgn(c.im()) < 0;
    const Rational mag = abs(c.im());
    coef = mag == 1 ? "i" : to_string(mag) + " i";
  } else {
    coef = "(" + to_string(c) + ")";
  }
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  out += coef;
  if (!coef.empty() && !body.empty()) out += " ";
  out += body;
}

std::string deriv_text(int c, int d) {
  std::string s = "W";
  for (int k = 0; k < d; ++k) s = "Dp(" + s + ")";
  for (int k = 0; k < c; ++k) s = "Dx(" + s + ")";
  return s;
}

}  // namespace

std::string format(const PolySymbol& f) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Exponents, CRat>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    return graded_before(l.first, l.first.x + l.first.p, r.first, r.first.x + r.first.p);
  });
  std::string out;
  for (const auto& [e, c] : terms) append_term(out, c, poly_factors(e.x, e.p));
  return out;
}

std::string format(const DiffOpExpr& e) {
  if (e.is_zero()) return "0 . W";
  std::vector<std::pair<OpMonomial, CRat>> terms(e.terms().begin(), e.terms().end());
  auto deg = [](const OpMonomial& m) { return m.a + m.b + m.c + m.d; };
  std::sort(terms.begin(), terms.end(), [&](const auto& l, const auto& r) {
    return graded_before(l.first, deg(l.first), r.first, deg(r.first));
  });
  std::string out;
  for (const auto& [m, c] : terms) {
    std::string body = poly_factors(m.a, m.b);
    if (!body.empty()) body += " . ";
    body += deriv_text(m.c, m.d);
    append_term(out, c, body);
  }
  return out;
}

std::string format(const CurrentSymbol& j) { return "(" + format(j.jx) + ", " + format(j.jp) + ")"; }

namespace {

int precedence(const Node& n) {
  switch (n.kind) {
    case Node::Kind::Sum:
    case Node::Kind::Diff: return 1;
    case Node::Kind::Star:
    case Node::Kind::Point: return 2;
    case Node::Kind::Neg: return 3;
    case Node::Kind::Pow: return 4;
    default: return 5;
  }
}

std::string text(const Node& n);

std::string wrapped(const Node& n, bool parens) { return parens ? "(" + text(n) + ")" : text(n); }

std::string text(const Node& n) {
  using K = Node::Kind;
  const int prec = precedence(n);
  switch (n.kind) {
    case K::Scalar: return to_string(n.scalar);
    case K::Sym:
      switch (n.symbol) {
        case Symbol::a: return "a";
        case Symbol::a_star: return "a~";
        case Symbol::x: return "x";
        case Symbol::p: return "p";
        case Symbol::i: return "i";
        case Symbol::hbar: return "hbar";
      }
      return "?";
    case K::W: return "W";
    case K::Sum:
    case K::Diff:
    case K::Star:
    case K::Point: {
      const char* op = n.kind == K::Sum ? " + " : n.kind == K::Diff ? " - " : n.kind == K::Star ? " * " : " . ";
      return wrapped(*n.lhs, precedence(*n.lhs) < prec) + op + wrapped(*n.rhs, precedence(*n.rhs) <= prec);
    }
    case K::Neg: return "-" + wrapped(*n.lhs, precedence(*n.lhs) < prec);
    case K::Pow: return wrapped(*n.lhs, precedence(*n.lhs) <= prec) + "^" + std::to_string(n.exponent);
    case K::Dx: return "Dx(" + text(*n.lhs) + ")";
    case K::Dp: return "Dp(" + text(*n.lhs) + ")";
    case K::Lap: return "Lap(" + text(*n.lhs) + ")";
  }
  return "?";
}

}  // namespace

std::string to_text(const ExprAst& ast) { return text(*ast.root); }

}  // namespace wigner::dsl

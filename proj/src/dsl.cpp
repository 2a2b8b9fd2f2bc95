#include "wigner/dsl.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <vector>

#include "wigner/star.hpp"

namespace wigner::dsl {

namespace {

enum class Tok { Int, Slash, Plus, Minus, Star, Dot, LParen, RParen, Caret, Ident, End };

struct Token {
  Tok type;
  std::string text;
  Position pos;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  Position pos;
  size_t k = 0;
  auto advance = [&](size_t n) {
    for (size_t j = 0; j < n; ++j, ++k) {
      if (src[k] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (k < src.size()) {
    const unsigned char ch = static_cast<unsigned char>(src[k]);
    if (std::isspace(ch)) {
      advance(1);
      continue;
    }
    const Position start = pos;
    if (std::isdigit(ch)) {
      size_t n = 0;
      while (k + n < src.size() && std::isdigit(static_cast<unsigned char>(src[k + n]))) ++n;
      out.push_back({Tok::Int, std::string(src.substr(k, n)), start});
      advance(n);
      continue;
    }
    if (std::isalpha(ch)) {
      size_t n = 0;
      while (k + n < src.size() && std::isalpha(static_cast<unsigned char>(src[k + n]))) ++n;
      std::string word(src.substr(k, n));
      if (word == "a" && k + n < src.size() && src[k + n] == '~') {
        word = "a~";
        ++n;
      }
      static const char* const kKnown[] = {"a", "a~", "W", "x", "p", "i", "hbar", "Dx", "Dp", "Lap"};
      bool known = false;
      for (const char* w : kKnown) known = known || word == w;
      if (!known) throw ParseError("unknown identifier '" + word + "'", start.line, start.column);
      out.push_back({Tok::Ident, word, start});
      advance(n);
      continue;
    }
    Tok t;
    switch (ch) {
      case '/': t = Tok::Slash; break;
      case '+': t = Tok::Plus; break;
      case '-': t = Tok::Minus; break;
      case '*': t = Tok::Star; break;
      case '.': t = Tok::Dot; break;
      case '(': t = Tok::LParen; break;
      case ')': t = Tok::RParen; break;
      case '^': t = Tok::Caret; break;
      default:
        throw ParseError(std::string("unexpected character '") + static_cast<char>(ch) + "'", start.line,
                         start.column);
    }
    out.push_back({t, std::string(1, static_cast<char>(ch)), start});
    advance(1);
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

constexpr int kMaxPower = 64;

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  NodePtr parse_all() {
    NodePtr e = parse_expr();
    if (peek().type != Tok::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[k_]; }
  const Token& take() { return toks_[k_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    // At end of input, point at the last real token (e.g. a dangling '+').
    const Token& t = (peek().type == Tok::End && k_ > 0) ? toks_[k_ - 1] : peek();
    throw ParseError(msg, t.pos.line, t.pos.column);
  }

  void expect(Tok t, const char* what) {
    if (peek().type != t) fail(std::string("expected ") + what);
    ++k_;
  }

  static NodePtr node(Node n) { return std::make_shared<const Node>(std::move(n)); }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    while (peek().type == Tok::Plus || peek().type == Tok::Minus) {
      const Node::Kind k = take().type == Tok::Plus ? Node::Kind::Sum : Node::Kind::Diff;
      NodePtr rhs = parse_term();
      lhs = node(Node{k, lhs->pos, {}, {}, 0, lhs, rhs});
    }
    return lhs;
  }

  static bool starts_atom(Tok t) { return t == Tok::Int || t == Tok::Ident || t == Tok::LParen; }

  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    for (;;) {
      Node::Kind k;
      if (peek().type == Tok::Star) {
        k = Node::Kind::Star;
        ++k_;
      } else if (peek().type == Tok::Dot) {
        k = Node::Kind::Point;
        ++k_;
      } else if (starts_atom(peek().type)) {
        k = Node::Kind::Point;
      } else {
        break;
      }
      NodePtr rhs = parse_factor();
      lhs = node(Node{k, lhs->pos, {}, {}, 0, lhs, rhs});
    }
    return lhs;
  }

  NodePtr parse_factor() {
    if (peek().type == Tok::Minus) {
      const Position pos = take().pos;
      NodePtr operand = parse_factor();
      return node(Node{Node::Kind::Neg, pos, {}, {}, 0, operand, nullptr});
    }
    NodePtr base = parse_atom();
    if (peek().type == Tok::Caret) {
      ++k_;
      if (peek().type != Tok::Int) fail("expected integer exponent after '^'");
      const Token& t = take();
      if (t.text.size() > 3 || std::stoi(t.text) > kMaxPower)
        throw ParseError("exponent too large", t.pos.line, t.pos.column);
      return node(Node{Node::Kind::Pow, base->pos, {}, {}, std::stoi(t.text), base, nullptr});
    }
    return base;
  }

  NodePtr parse_atom() {
    const Token& t = peek();
    switch (t.type) {
      case Tok::Int: {
        ++k_;
        mpz_class num(t.text), den(1);
        if (peek().type == Tok::Slash) {
          ++k_;
          if (peek().type != Tok::Int) fail("expected integer denominator after '/'");
          const Token& d = take();
          den = mpz_class(d.text);
          if (den == 0) throw ParseError("zero denominator", d.pos.line, d.pos.column);
        }
        Rational q(num, den);
        q.canonicalize();
        return node(Node{Node::Kind::Scalar, t.pos, q, {}, 0, nullptr, nullptr});
      }
      case Tok::LParen: {
        ++k_;
        NodePtr e = parse_expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Ident: {
        ++k_;
        const std::string& w = t.text;
        if (w == "Dx" || w == "Dp" || w == "Lap") {
          expect(Tok::LParen, "'(' after derivative");
          NodePtr e = parse_expr();
          expect(Tok::RParen, "')'");
          const Node::Kind k = w == "Dx" ? Node::Kind::Dx : w == "Dp" ? Node::Kind::Dp : Node::Kind::Lap;
          return node(Node{k, t.pos, {}, {}, 0, e, nullptr});
        }
        if (w == "W") return node(Node{Node::Kind::W, t.pos, {}, {}, 0, nullptr, nullptr});
        Symbol s = w == "a"    ? Symbol::a
                   : w == "a~" ? Symbol::a_star
                   : w == "x"  ? Symbol::x
                   : w == "p"  ? Symbol::p
                   : w == "i"  ? Symbol::i
                               : Symbol::hbar;
        return node(Node{Node::Kind::Sym, t.pos, {}, s, 0, nullptr, nullptr});
      }
      case Tok::End: fail("unexpected end of input");
      default: fail("expected a factor, found '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  size_t k_ = 0;
};

const Node* first_w(const Node* n) {
  if (!n) return nullptr;
  if (n->kind == Node::Kind::W) return n;
  if (const Node* l = first_w(n->lhs.get())) return l;
  return first_w(n->rhs.get());
}

// Number of W factors (0 or 1) in the subtree; throws on misplaced W.
int count_w(const Node& n) {
  using K = Node::Kind;
  switch (n.kind) {
    case K::Scalar:
    case K::Sym: return 0;
    case K::W: return 1;
    case K::Star:
    case K::Point: {
      const int l = count_w(*n.lhs), r = count_w(*n.rhs);
      if (l + r > 1) {
        const Node* w = first_w(n.rhs.get());
        throw ParseError("more than one W in a product", w->pos.line, w->pos.column);
      }
      return l + r;
    }
    case K::Sum:
    case K::Diff: {
      const int l = count_w(*n.lhs), r = count_w(*n.rhs);
      if (l != r) {
        const Node& bad = l == 0 ? *n.lhs : *n.rhs;
        throw ParseError("W absent from a term", bad.pos.line, bad.pos.column);
      }
      return l;
    }
    case K::Neg:
    case K::Dx:
    case K::Dp:
    case K::Lap: return count_w(*n.lhs);
    case K::Pow:
      if (count_w(*n.lhs) != 0) throw ParseError("power of a factor containing W", n.pos.line, n.pos.column);
      return 0;
  }
  return 0;
}

// Elaborated value. A W-free value is a polynomial; a W-linear value is an
// operator. `odd` marks a pending factor 1/sqrt(2 hbar) from one unpaired
// ladder symbol; two of them combine into the rational 1/(2 hbar).
struct Value {
  bool has_w = false;
  PolySymbol poly;
  DiffOpExpr op;
  bool odd = false;
};

class Elaborator {
 public:
  explicit Elaborator(const Rational& hbar) : hbar_(hbar) {}

  Value eval(const Node& n) {
    using K = Node::Kind;
    switch (n.kind) {
      case K::Scalar: return scalar(PolySymbol(CRat(n.scalar)));
      case K::Sym: return symbol(n);
      case K::W: {
        Value v;
        v.has_w = true;
        v.op = DiffOpExpr::identity(hbar_);
        return v;
      }
      case K::Star: return star(eval(*n.lhs), eval(*n.rhs));
      case K::Point: return point(eval(*n.lhs), eval(*n.rhs));
      case K::Sum:
      case K::Diff: {
        Value l = eval(*n.lhs), r = eval(*n.rhs);
        if (l.odd != r.odd)
          throw ElaborationError("terms differ by an unpaired ladder symbol (a or a~); the sum is irrational");
        const CRat s = n.kind == K::Sum ? CRat(1) : CRat(-1);
        if (l.has_w) {
          l.op = scale_and_add(CRat(1), l.op, s, r.op);
        } else {
          l.poly += r.poly * s;
        }
        return l;
      }
      case K::Neg: {
        Value v = eval(*n.lhs);
        if (v.has_w) {
          v.op = -v.op;
        } else {
          v.poly = -v.poly;
        }
        return v;
      }
      case K::Dx:
      case K::Dp:
      case K::Lap: {
        Value v = eval(*n.lhs);
        if (v.has_w) {
          DiffOpExpr d = n.kind == K::Dx   ? DiffOpExpr::dx(hbar_)
                         : n.kind == K::Dp ? DiffOpExpr::dp(hbar_)
                                           : DiffOpExpr::laplacian(hbar_);
          v.op = compose(d, v.op);
        } else {
          v.poly = n.kind == K::Dx ? v.poly.dx() : n.kind == K::Dp ? v.poly.dp() : v.poly.dx(2) + v.poly.dp(2);
        }
        return v;
      }
      case K::Pow: {
        const Value base = eval(*n.lhs);
        Value v = scalar(PolySymbol(CRat(1)));
        for (int k = 0; k < n.exponent; ++k) v = point(v, base);
        return v;
      }
    }
    throw ElaborationError("unknown node");
  }

 private:
  static Value scalar(PolySymbol p) {
    Value v;
    v.poly = std::move(p);
    return v;
  }

  Value symbol(const Node& n) {
    switch (n.symbol) {
      case Symbol::x: return scalar(PolySymbol::x());
      case Symbol::p: return scalar(PolySymbol::p());
      case Symbol::i: return scalar(PolySymbol(CRat::i()));
      case Symbol::hbar: return scalar(PolySymbol(CRat(hbar_)));
      case Symbol::a:
      case Symbol::a_star: {
        if (sgn(hbar_) <= 0) throw ElaborationError("ladder symbols need hbar > 0");
        Value v = scalar(ladder_scaled(n.symbol == Symbol::a ? Ladder::a : Ladder::a_star));
        v.odd = true;
        return v;
      }
    }
    throw ElaborationError("unknown symbol");
  }

  // Pairs two pending 1/sqrt(2 hbar) factors into 1/(2 hbar).
  bool combine_parity(bool l, bool r, CRat& factor) const {
    if (l && r) factor = CRat(ladder_pair_factor(hbar_));
    return l != r;
  }

  Value star(const Value& l, const Value& r) {
    Value v;
    CRat f(1);
    v.odd = combine_parity(l.odd, r.odd, f);
    if (!l.has_w && !r.has_w) {
      v.poly = star_poly(l.poly, r.poly, hbar_) * f;
    } else if (!l.has_w) {
      v.has_w = true;
      v.op = f * compose(bopp(l.poly, BoppSide::Left, hbar_), r.op);
    } else if (!r.has_w) {
      v.has_w = true;
      v.op = f * compose(bopp(r.poly, BoppSide::Right, hbar_), l.op);
    } else {
      throw ElaborationError("more than one W in a product");
    }
    return v;
  }

  Value point(const Value& l, const Value& r) {
    Value v;
    CRat f(1);
    v.odd = combine_parity(l.odd, r.odd, f);
    if (!l.has_w && !r.has_w) {
      v.poly = (l.poly * r.poly) * f;
    } else if (l.has_w != r.has_w) {
      const Value& coef = l.has_w ? r : l;
      const Value& op = l.has_w ? l : r;
      v.has_w = true;
      v.op = f * compose(DiffOpExpr::multiply(coef.poly, hbar_), op.op);
    } else {
      throw ElaborationError("more than one W in a product");
    }
    return v;
  }

  Rational hbar_;
};

}  // namespace

ExprAst parse(std::string_view text) {
  Parser parser(lex(text));
  ExprAst ast{parser.parse_all()};
  if (count_w(*ast.root) != 1)
    throw ParseError("W absent from a term", ast.root->pos.line, ast.root->pos.column);
  return ast;
}

ExprAst parse_symbol(std::string_view text) {
  Parser parser(lex(text));
  ExprAst ast{parser.parse_all()};
  if (count_w(*ast.root) != 0) {
    const Node* w = first_w(ast.root.get());
    throw ParseError("W not allowed in a phase-space function", w->pos.line, w->pos.column);
  }
  return ast;
}

DiffOpExpr elaborate(const ExprAst& ast, const Rational& hbar) {
  Value v = Elaborator(hbar).eval(*ast.root);
  if (!v.has_w) throw ElaborationError("expression does not act on W");
  if (v.odd)
    throw ElaborationError(
        "unpaired ladder symbol: each term needs an even number of a / a~ factors so that the "
        "1/sqrt(2 hbar) normalizations pair up");
  return v.op;
}

PolySymbol elaborate_symbol(const ExprAst& ast, const Rational& hbar) {
  Value v = Elaborator(hbar).eval(*ast.root);
  if (v.has_w) throw ElaborationError("expected a W-free phase-space function");
  if (v.odd) throw ElaborationError("unpaired ladder symbol in phase-space function");
  return v.poly;
}

bool same_tree(const ExprAst& a, const ExprAst& b) {
  struct Cmp {
    static bool eq(const Node* x, const Node* y) {
      if (!x || !y) return x == y;
      if (x->kind != y->kind) return false;
      switch (x->kind) {
        case Node::Kind::Scalar: return x->scalar == y->scalar;
        case Node::Kind::Sym: return x->symbol == y->symbol;
        case Node::Kind::Pow:
          if (x->exponent != y->exponent) return false;
          break;
        default: break;
      }
      return eq(x->lhs.get(), y->lhs.get()) && eq(x->rhs.get(), y->rhs.get());
    }
  };
  return Cmp::eq(a.root.get(), b.root.get());
}

NodePtr make_scalar(Rational q) {
  return std::make_shared<const Node>(Node{Node::Kind::Scalar, {}, std::move(q), {}, 0, nullptr, nullptr});
}

NodePtr make_symbol(Symbol s) {
  return std::make_shared<const Node>(Node{Node::Kind::Sym, {}, {}, s, 0, nullptr, nullptr});
}

NodePtr make_w() { return std::make_shared<const Node>(Node{Node::Kind::W, {}, {}, {}, 0, nullptr, nullptr}); }

NodePtr make_unary(Node::Kind k, NodePtr operand) {
  return std::make_shared<const Node>(Node{k, {}, {}, {}, 0, std::move(operand), nullptr});
}

NodePtr make_binary(Node::Kind k, NodePtr lhs, NodePtr rhs) {
  return std::make_shared<const Node>(Node{k, {}, {}, {}, 0, std::move(lhs), std::move(rhs)});
}

NodePtr make_pow(NodePtr base, int exponent) {
  return std::make_shared<const Node>(Node{Node::Kind::Pow, {}, {}, {}, exponent, std::move(base), nullptr});
}

}  // namespace wigner::dsl

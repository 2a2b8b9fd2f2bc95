#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "wigner/divergence.hpp"
#include "wigner/errors.hpp"

namespace wigner::dsl {

// Text grammar for phase-space expressions:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '.') factor | factor)*
//   factor := '-' factor | atom ('^' integer)?
//   atom   := scalar | 'i' | 'hbar' | 'a' | 'a~' | 'W' | 'x' | 'p'
//           | 'Dx(' expr ')' | 'Dp(' expr ')' | 'Lap(' expr ')' | '(' expr ')'
//   scalar := integer ('/' integer)?
//
// '*' is the star product, '.' and juxtaposition are the pointwise product,
// '^' is a pointwise power of a W-free factor. Unary minus binds tighter than
// the products, which bind tighter than '+'/'-'. Every additive term carries
// exactly one W. a~ stands for the conjugate ladder symbol a*.
inline constexpr std::string_view kGrammar =
    "expr   := term (('+' | '-') term)*\n"
    "term   := factor (('*' | '.') factor | factor)*\n"
    "factor := '-' factor | atom ('^' integer)?\n"
    "atom   := scalar | 'i' | 'hbar' | 'a' | 'a~' | 'W' | 'x' | 'p'\n"
    "        | 'Dx(' expr ')' | 'Dp(' expr ')' | 'Lap(' expr ')' | '(' expr ')'\n"
    "scalar := integer ('/' integer)?\n"
    "'*' star product, '.' or juxtaposition pointwise product, a~ = a*\n";

struct Position {
  int line = 1;
  int column = 1;
};

enum class Symbol { a, a_star, x, p, i, hbar };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  enum class Kind { Scalar, Sym, W, Star, Point, Sum, Diff, Neg, Dx, Dp, Lap, Pow };

  Kind kind;
  Position pos;
  Rational scalar;         // Scalar
  Symbol symbol{};         // Sym
  int exponent = 0;        // Pow
  NodePtr lhs;             // binary nodes, and the operand of unary ones
  NodePtr rhs;
};

struct ExprAst {
  NodePtr root;
};

// Syntax and W-placement errors throw ParseError carrying line/column.
ExprAst parse(std::string_view text);

// Like parse, but for a W-free phase-space function (e.g. a Hamiltonian).
ExprAst parse_symbol(std::string_view text);

// Lowers the AST onto star-engine primitives. Throws ElaborationError when a
// term carries an unpaired ladder symbol.
DiffOpExpr elaborate(const ExprAst& ast, const Rational& hbar);

// Elaborates a W-free AST to its polynomial.
PolySymbol elaborate_symbol(const ExprAst& ast, const Rational& hbar);

// Structural equality, ignoring source positions.
bool same_tree(const ExprAst& a, const ExprAst& b);

// Re-parsable text with the minimum number of parentheses.
std::string to_text(const ExprAst& ast);

// Canonical DSL text for an operator: graded ordering on (a, b, c, d), lowest
// total degree first, e.g. "x . W - 1/2 Dx(W)".
std::string format(const DiffOpExpr& e);
std::string format(const PolySymbol& f);
std::string format(const CurrentSymbol& j);

// Node builders, used by tests and generators.
NodePtr make_scalar(Rational q);
NodePtr make_symbol(Symbol s);
NodePtr make_w();
NodePtr make_unary(Node::Kind k, NodePtr operand);
NodePtr make_binary(Node::Kind k, NodePtr lhs, NodePtr rhs);
NodePtr make_pow(NodePtr base, int exponent);

}  // namespace wigner::dsl

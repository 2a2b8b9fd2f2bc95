#pragma once

#include "wigner/diffop.hpp"
#include "wigner/poly.hpp"

namespace wigner {

// Which side of W a symbol multiplies under the star product.
//   Left:  f * (.)  with x -> x + (i hbar/2) d_p,  p -> p - (i hbar/2) d_x
//   Right: (.) * g  with x -> x - (i hbar/2) d_p,  p -> p + (i hbar/2) d_x
enum class BoppSide { Left, Right };

// Groenewold star product of two polynomials; the exponential series
// terminates at order min(deg f, deg g).
PolySymbol star_poly(const PolySymbol& f, const PolySymbol& g, const Rational& hbar);

// Differential operator realizing f * W (Left) or W * f (Right). Built by
// substituting the shifted arguments into the symmetric (Weyl) ordering of
// each monomial, independently of star_poly.
DiffOpExpr bopp(const PolySymbol& f, BoppSide side, const Rational& hbar);

// W -> f * W * g.
DiffOpExpr sandwich(const PolySymbol& f, const PolySymbol& g, const Rational& hbar);

// W -> (1/(i hbar)) (H * W - W * H). Throws std::domain_error for hbar == 0.
DiffOpExpr moyal_bracket(const PolySymbol& h, const Rational& hbar);

// W -> (d_x H) d_p W - (d_p H) d_x W. The hbar argument only tags the result.
DiffOpExpr poisson_bracket(const PolySymbol& h, const Rational& hbar = 1);

// Ladder symbols a = (x + i p)/sqrt(2 hbar) and a~ = (x - i p)/sqrt(2 hbar).
// They are stored scaled by sqrt(2 hbar); every product of two ladder symbols
// picks up the rational factor 1/(2 hbar), so results stay exact.
enum class Ladder { a, a_star };

PolySymbol ladder_scaled(Ladder l);
Rational ladder_pair_factor(const Rational& hbar);

// l1 * l2 as an exact polynomial (e.g. a~ * a = (x^2+p^2)/(2 hbar) - 1/2).
PolySymbol ladder_star(Ladder l1, Ladder l2, const Rational& hbar);
// W -> l * W * r
DiffOpExpr ladder_sandwich(Ladder l, Ladder r, const Rational& hbar);
// W -> l1 * l2 * W
DiffOpExpr ladder_left(Ladder l1, Ladder l2, const Rational& hbar);
// W -> W * l1 * l2
DiffOpExpr ladder_right(Ladder l1, Ladder l2, const Rational& hbar);

}  // namespace wigner

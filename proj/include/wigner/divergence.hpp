#pragma once

#include <string_view>

#include "wigner/diffop.hpp"
#include "wigner/poly.hpp"

namespace wigner {

// Symbolic phase-space vector field (jx, jp), each an operator acting on W.
// Its divergence is d_x o jx + d_p o jp.
struct CurrentSymbol {
  DiffOpExpr jx;
  DiffOpExpr jp;

  DiffOpExpr divergence() const;
  CurrentSymbol operator-() const { return {-jx, -jp}; }
};

// E = d_x o current.jx + d_p o current.jp + residual, exactly.
struct Decomposition {
  CurrentSymbol current;
  PolySymbol residual;
};

// Derivative-free obstruction of E: the transpose of E applied to 1.
// Zero iff E is a total divergence.
PolySymbol residual(const DiffOpExpr& e);

// Canonical reduction: monomials with a d_x are peeled through d_x first,
// those with only d_p through d_p; multiplication terms are left over.
Decomposition decompose(const DiffOpExpr& e);

bool is_divergence(const DiffOpExpr& e);

enum class Generator {
  photon_add,                 // a~ * W * a
  photon_remove,              // a * W * a~
  number_commutator,          // a~*a*W - W*a~*a
  number_anticommutator,      // a~*a*W + W*a~*a
  antinumber_anticommutator,  // a*a~*W + W*a*a~
  lindblad_up,                // 2 a~*W*a - (a*a~*W + W*a*a~)
  lindblad_down,              // 2 a*W*a~ - (a~*a*W + W*a~*a)
};

inline constexpr Generator kAllGenerators[] = {
    Generator::photon_add,          Generator::photon_remove, Generator::number_commutator,
    Generator::number_anticommutator, Generator::antinumber_anticommutator, Generator::lindblad_up,
    Generator::lindblad_down};

std::string_view to_string(Generator g);
// Throws std::invalid_argument for an unknown name.
Generator generator_from_name(std::string_view name);

DiffOpExpr named_generator(Generator g, const Rational& hbar = 1);
DiffOpExpr named_generator(std::string_view name, const Rational& hbar = 1);

enum class LindbladSign { minus, plus };

// Continuity-equation currents J (dW/dt = -div J) of the two Lindblad
// combinations: J_minus = (x W - (hbar/2) d_x W, p W - (hbar/2) d_p W) drives
// lindblad_up, J_plus = (-x W - (hbar/2) d_x W, -p W - (hbar/2) d_p W) drives
// lindblad_down.
CurrentSymbol j_lindblad(LindbladSign sign, const Rational& hbar = 1);

}  // namespace wigner

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wigner/divergence.hpp"

namespace wigner {

enum class Expectation {
  identity,        // lhs == rhs term for term
  divergence,      // residual vanishes
  not_divergence,  // residual is the stated nonzero polynomial
  mismatch,        // a literal form that must NOT hold
};

struct IdentityCheck {
  std::string name;
  Expectation expect;
  bool passed = false;
  // identity / mismatch: lhs - rhs.  divergence checks: the operator itself.
  DiffOpExpr difference;
  PolySymbol residual;
  // Continuity current J (E = -div J + residual) for divergence checks.
  std::optional<CurrentSymbol> current;
  std::string note;
};

// Exact phase-space forms of the photon addition/removal generators, their
// anticommutator compensators and the Lindblad combinations, together with
// the negative results for the plain sum and difference.
std::vector<IdentityCheck> run_identity_suite(const Rational& hbar = 1);

// Reference right-hand sides written with d/dx, d/dp, multiplication and
// composition only (no star products).
namespace reference {
DiffOpExpr div_xp(const Rational& hbar);  // W -> d_x(x W) + d_p(p W)
DiffOpExpr photon_add(const Rational& hbar);
DiffOpExpr photon_remove(const Rational& hbar);
DiffOpExpr number_anticommutator(const Rational& hbar);
DiffOpExpr antinumber_anticommutator(const Rational& hbar);
DiffOpExpr lindblad_up(const Rational& hbar);
DiffOpExpr lindblad_down(const Rational& hbar);
// W -> d_x(p W) - d_p(x W), the divergence of the classical oscillator current
DiffOpExpr oscillator_current_divergence(const Rational& hbar);
PolySymbol photon_add_residual(const Rational& hbar);
PolySymbol photon_remove_residual(const Rational& hbar);
}  // namespace reference

}  // namespace wigner

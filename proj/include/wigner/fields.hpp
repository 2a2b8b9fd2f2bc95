#pragma once

#include <functional>
#include <string>

#include "wigner/diffop.hpp"
#include "wigner/spectral.hpp"

namespace wigner {

// Receives non-fatal numerical warnings (default: stderr).
using WarningHandler = std::function<void(const std::string&)>;
void set_warning_handler(WarningHandler h);

// E applied to W with spectral derivatives. Warns when W does not decay to
// 1e-10 of its peak at the box edge.
WignerField apply_expr(const DiffOpExpr& e, const WignerField& w, Exec exec = default_exec());
WignerField apply_expr(const CompiledOperator& op, const WignerField& w, Exec exec = default_exec());

struct EnvCurrentParts {
  CurrentField damp;  // -(gamma/2) (x, p) W
  CurrentField diff;  // -(gamma/2)(hbar/omega0)(nbar + 1/2) grad W
};

EnvCurrentParts env_current_parts(const WignerField& w, const BathParams& bath, Exec exec = default_exec());
CurrentField env_current(const WignerField& w, const BathParams& bath, Exec exec = default_exec());

// (W dH/dp, -W dH/dx)
CurrentField classical_current(const PolySymbol& h, const WignerField& w);

// d_x jx + d_p jp, spectrally.
WignerField divergence(const CurrentField& j, Exec exec = default_exec());

// -div J_env as an operator on W. With diffusion = false only the damping
// half is kept (test-only: shows why both halves are needed).
CompiledOperator bath_operator(const BathParams& bath, bool diffusion = true);

WignerField renormalized(const WignerField& w);

// Fourth-order periodic central differences, d_x^c d_p^d by repeated first
// derivatives. Cross-check for the spectral path.
WignerField fd4_derivative(const WignerField& w, int c, int d);

cplx integral(const WignerField& w);
double l2_distance(const WignerField& a, const WignerField& b);
double linf_distance(const WignerField& a, const WignerField& b);

Diagnostics diagnostics(const WignerField& w, double hbar = 1.0, Exec exec = default_exec());

}  // namespace wigner

#include "wigner/fields.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace wigner {

namespace {

WarningHandler& handler() {
  static WarningHandler h = [](const std::string& msg) { std::cerr << "warning: " << msg << "\n"; };
  return h;
}

void require_same_grid(const PhaseSpaceGrid& a, const PhaseSpaceGrid& b) {
  if (!(a == b)) throw std::invalid_argument("fields live on different grids");
}

}  // namespace

void set_warning_handler(WarningHandler h) { handler() = std::move(h); }

WignerField apply_expr(const CompiledOperator& op, const WignerField& w, Exec exec) {
  const double ratio = boundary_ratio(w);
  if (ratio > 1e-10) {
    std::ostringstream msg;
    msg << "field '" << w.label << "' does not decay at the box edge (boundary/peak = " << ratio
        << "); periodic derivatives may be inaccurate";
    handler()(msg.str());
  }
  SpectralEngine engine(w.grid, exec);
  WignerField out(w.grid, w.label);
  engine.apply(op, w.values, out.values);
  return out;
}

WignerField apply_expr(const DiffOpExpr& e, const WignerField& w, Exec exec) {
  return apply_expr(CompiledOperator::from(e), w, exec);
}

EnvCurrentParts env_current_parts(const WignerField& w, const BathParams& bath, Exec exec) {
  bath.validate();
  const PhaseSpaceGrid& g = w.grid;
  EnvCurrentParts parts{CurrentField(g), CurrentField(g)};
  if (bath.gamma == 0.0) return parts;

  const double damp = -bath.gamma / 2.0;
  const double diff = -bath.gamma / 2.0 * (bath.hbar / bath.omega0) * (bath.nbar + 0.5);
  SpectralEngine engine(g, exec);
  std::vector<cplx> gx(g.size()), gp(g.size());
  engine.derivative(w.values, gx, 1, 0);
  engine.derivative(w.values, gp, 0, 1);
  for (int j = 0; j < g.np; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const size_t k = static_cast<size_t>(j) * g.nx + i;
      const double v = w.values[k].real();
      parts.damp.jx[k] = damp * g.x(i) * v;
      parts.damp.jp[k] = damp * g.p(j) * v;
      parts.diff.jx[k] = diff * gx[k].real();
      parts.diff.jp[k] = diff * gp[k].real();
    }
  return parts;
}

CurrentField env_current(const WignerField& w, const BathParams& bath, Exec exec) {
  EnvCurrentParts parts = env_current_parts(w, bath, exec);
  for (size_t k = 0; k < parts.damp.jx.size(); ++k) {
    parts.damp.jx[k] += parts.diff.jx[k];
    parts.damp.jp[k] += parts.diff.jp[k];
  }
  return std::move(parts.damp);
}

CurrentField classical_current(const PolySymbol& h, const WignerField& w) {
  const PhaseSpaceGrid& g = w.grid;
  const PolySymbol hx = h.dx(), hp = h.dp();
  CurrentField j(g);
  for (int jj = 0; jj < g.np; ++jj)
    for (int i = 0; i < g.nx; ++i) {
      const size_t k = static_cast<size_t>(jj) * g.nx + i;
      const double v = w.values[k].real();
      j.jx[k] = v * hp.evaluate(g.x(i), g.p(jj)).real();
      j.jp[k] = -v * hx.evaluate(g.x(i), g.p(jj)).real();
    }
  return j;
}

WignerField divergence(const CurrentField& j, Exec exec) {
  const PhaseSpaceGrid& g = j.grid;
  SpectralEngine engine(g, exec);
  std::vector<cplx> jx(j.jx.begin(), j.jx.end()), jp(j.jp.begin(), j.jp.end());
  WignerField out(g, "div J");
  std::vector<cplx> tmp(g.size());
  engine.derivative(jx, out.values, 1, 0);
  engine.derivative(jp, tmp, 0, 1);
  for (size_t k = 0; k < tmp.size(); ++k) out.values[k] += tmp[k];
  return out;
}

CompiledOperator bath_operator(const BathParams& bath, bool diffusion) {
  bath.validate();
  CompiledOperator op;
  if (bath.gamma == 0.0) return op;
  const double g2 = bath.gamma / 2.0;
  op.add({1, 0, 1, 0, g2});
  op.add({0, 1, 0, 1, g2});
  op.add({0, 0, 0, 0, 2.0 * g2});
  if (diffusion) {
    const double dcoef = g2 * (bath.hbar / bath.omega0) * (bath.nbar + 0.5);
    op.add({0, 0, 2, 0, dcoef});
    op.add({0, 0, 0, 2, dcoef});
  }
  return op;
}

WignerField renormalized(const WignerField& w) {
  const double norm = integral(w).real();
  if (norm == 0.0) throw std::domain_error("cannot renormalize a field with zero integral");
  WignerField out = w;
  for (cplx& v : out.values) v /= norm;
  return out;
}

WignerField fd4_derivative(const WignerField& w, int c, int d) {
  const PhaseSpaceGrid& g = w.grid;
  WignerField cur = w;
  auto pass = [&](bool along_x) {
    WignerField next(g, w.label);
    const int n = along_x ? g.nx : g.np;
    const double h = along_x ? g.dx() : g.dp();
    for (int j = 0; j < g.np; ++j)
      for (int i = 0; i < g.nx; ++i) {
        auto at = [&](int s) {
          return along_x ? cur.at(((i + s) % n + n) % n, j) : cur.at(i, ((j + s) % n + n) % n);
        };
        next.at(i, j) = (at(-2) - 8.0 * at(-1) + 8.0 * at(1) - at(2)) / (12.0 * h);
      }
    cur = std::move(next);
  };
  for (int k = 0; k < c; ++k) pass(true);
  for (int k = 0; k < d; ++k) pass(false);
  return cur;
}

cplx integral(const WignerField& w) {
  return kernels::serial::row_sum(w.values, w.grid.nx, w.grid.np) * (w.grid.dx() * w.grid.dp());
}

double l2_distance(const WignerField& a, const WignerField& b) {
  require_same_grid(a.grid, b.grid);
  double s = 0.0;
  for (size_t k = 0; k < a.values.size(); ++k) s += std::norm(a.values[k] - b.values[k]);
  return std::sqrt(s * a.grid.dx() * a.grid.dp());
}

double linf_distance(const WignerField& a, const WignerField& b) {
  require_same_grid(a.grid, b.grid);
  double m = 0.0;
  for (size_t k = 0; k < a.values.size(); ++k) m = std::max(m, std::abs(a.values[k] - b.values[k]));
  return m;
}

Diagnostics diagnostics(const WignerField& w, double hbar, Exec exec) {
  SpectralEngine engine(w.grid, exec);
  const kernels::Moments m = engine.moments(w.values);
  const double da = w.grid.dx() * w.grid.dp();
  Diagnostics d;
  d.norm = m.s0 * da;
  d.mean_x = m.sx / m.s0;
  d.mean_p = m.sp / m.s0;
  d.var_x = m.sxx / m.s0 - d.mean_x * d.mean_x;
  d.var_p = m.spp / m.s0 - d.mean_p * d.mean_p;
  d.purity = 2.0 * std::numbers::pi * hbar * m.sww * da;
  d.min_value = m.min_value;
  return d;
}

}  // namespace wigner

#include "wigner/evolution.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "wigner/errors.hpp"
#include "wigner/star.hpp"

namespace wigner {

namespace {

// Real-axis extent of RK4's stability region is 2.785; the imaginary extent
// 2.828. The smaller bound covers both damping and rotation.
constexpr double kRk4Radius = 2.78;

double spectral_radius_estimate(const CompiledOperator& op, const PhaseSpaceGrid& g) {
  const double xmax = std::max(std::abs(g.x_min), std::abs(g.x_max));
  const double pmax = std::max(std::abs(g.p_min), std::abs(g.p_max));
  const double kx = std::numbers::pi / g.dx(), kp = std::numbers::pi / g.dp();
  double rho = 0.0;
  for (const CompiledTerm& t : op.terms)
    rho += std::abs(t.coef) * std::pow(xmax, t.a) * std::pow(pmax, t.b) * std::pow(kx, t.c) * std::pow(kp, t.d);
  return rho;
}

// Hamiltonian flow plus the constant-coefficient diffusion half of the bath.
// The damping half is applied in divergence form by the stepper.
CompiledOperator generator_for(const EvolutionConfig& c) {
  CompiledOperator op = CompiledOperator::from(moyal_bracket(c.hamiltonian, 1));
  if (c.bath && c.bath->gamma > 0.0 && c.bath_diffusion) {
    const BathParams& b = *c.bath;
    const double diff = 0.5 * b.gamma * (b.hbar / b.omega0) * (b.nbar + 0.5);
    op.add({0, 0, 2, 0, diff});
    op.add({0, 0, 0, 2, diff});
  }
  return op;
}

void validate(const EvolutionConfig& c) {
  c.grid.validate();
  if (c.bath) c.bath->validate();
  if (!(c.t_end >= 0.0) || !std::isfinite(c.t_end)) throw ConfigError("t_end must be a finite value >= 0");
  if (c.frame_stride < 1) throw ConfigError("frame_stride must be >= 1");
  if (c.dt && !(*c.dt > 0.0 && std::isfinite(*c.dt))) throw ConfigError("dt must be a finite value > 0");
  if (c.initial_field && !(c.initial_field->grid == c.grid)) throw ConfigError("initial field is not on the run grid");
  for (const auto& [e, coef] : c.hamiltonian.terms())
    if (!coef.is_real()) throw ConfigError("hamiltonian must have real coefficients");
}

void fail_unless_finite(std::span<const cplx> w, Exec exec, double t) {
  const bool ok = exec == Exec::Parallel ? kernels::omp::all_finite(w) : kernels::serial::all_finite(w);
  if (!ok) {
    std::ostringstream msg;
    msg << "numeric blow-up: non-finite values at t = " << t;
    throw NumericBlowup(msg.str(), t);
  }
}

}  // namespace

Stepper::Stepper(const EvolutionConfig& config)
    : engine_(config.grid, config.exec),
      op_(generator_for(config)),
      damping_(config.bath && config.bath->gamma > 0.0 ? 0.5 * config.bath->gamma : 0.0) {
  CompiledOperator full = op_;
  if (damping_ > 0.0) {
    full.add({1, 0, 1, 0, damping_});
    full.add({0, 1, 0, 1, damping_});
  }
  const double rho = spectral_radius_estimate(full, config.grid);
  limit_ = rho > 0.0 ? kRk4Radius / rho : std::numeric_limits<double>::infinity();
  const size_t n = config.grid.size();
  k1_.resize(n);
  k2_.resize(n);
  k3_.resize(n);
  k4_.resize(n);
  tmp_.resize(n);
  if (damping_ > 0.0) {
    const PhaseSpaceGrid& g = config.grid;
    xs_.resize(g.nx);
    ps_.resize(g.np);
    for (int i = 0; i < g.nx; ++i) xs_[i] = g.x(i);
    for (int j = 0; j < g.np; ++j) ps_[j] = g.p(j);
    work_.resize(n);
    dwork_.resize(n);
  }
}

// (gamma/2) [d_x(x W) + d_p(p W)] rather than (gamma/2)(x d_x + p d_p + 2) W:
// equal on the plane, but on the periodic box the seam is a source of the
// drift, and only the conservative form dilutes what sits there instead of
// amplifying it at rate gamma. It also keeps the discrete trace exact.
void Stepper::rhs(std::span<const cplx> w, std::span<cplx> out) {
  engine_.apply(op_, w, out);
  if (damping_ == 0.0) return;
  const size_t nx = xs_.size(), np = ps_.size();
  for (size_t j = 0; j < np; ++j)
    for (size_t i = 0; i < nx; ++i) work_[j * nx + i] = xs_[i] * w[j * nx + i];
  engine_.derivative(work_, dwork_, 1, 0);
  for (size_t k = 0; k < out.size(); ++k) out[k] += damping_ * dwork_[k];
  for (size_t j = 0; j < np; ++j)
    for (size_t i = 0; i < nx; ++i) work_[j * nx + i] = ps_[j] * w[j * nx + i];
  engine_.derivative(work_, dwork_, 0, 1);
  for (size_t k = 0; k < out.size(); ++k) out[k] += damping_ * dwork_[k];
}

void Stepper::step(std::span<cplx> w, double dt) {
  if (dt == 0.0) return;
  auto lincomb = engine_.exec() == Exec::Parallel ? kernels::omp::lincomb : kernels::serial::lincomb;
  rhs(w, k1_);
  lincomb(tmp_, 1.0, w, dt / 2, k1_);
  rhs(tmp_, k2_);
  lincomb(tmp_, 1.0, w, dt / 2, k2_);
  rhs(tmp_, k3_);
  lincomb(tmp_, 1.0, w, dt, k3_);
  rhs(tmp_, k4_);
  for (size_t k = 0; k < w.size(); ++k) w[k] += dt / 6.0 * (k1_[k] + 2.0 * (k2_[k] + k3_[k]) + k4_[k]);
}

WignerField rhs(const WignerField& w, const PolySymbol& h, const std::optional<BathParams>& bath, Exec exec) {
  WignerField out = apply_expr(moyal_bracket(h, 1), w, exec);
  if (bath && bath->gamma > 0.0) {
    const WignerField div = divergence(env_current(w, *bath, exec), exec);
    for (size_t k = 0; k < out.values.size(); ++k) out.values[k] -= div.values[k];
  }
  return out;
}

WignerField step(const WignerField& w, const EvolutionConfig& config) {
  EvolutionConfig c = config;
  c.grid = w.grid;
  validate(c);
  Stepper s(c);
  WignerField out = w;
  s.step(out.values, c.dt.value_or(s.default_dt()));
  return out;
}

StepPlan plan_steps(const EvolutionConfig& config) {
  validate(config);
  Stepper s(config);
  const double dt = config.dt.value_or(s.default_dt());
  if (dt > s.stability_limit()) {
    std::ostringstream msg;
    msg << "dt = " << dt << " exceeds the stability limit " << s.stability_limit();
    throw ConfigError(msg.str());
  }
  if (config.t_end == 0.0) return {0, 0.0};
  // Tolerate round-off in t_end / dt so that 2 pi / (2 pi / N) gives N.
  const long n = std::max(1L, static_cast<long>(std::ceil(config.t_end / dt * (1.0 - 1e-12))));
  return {n, config.t_end / static_cast<double>(n)};
}

void evolve(const EvolutionConfig& config, const std::function<void(const Frame&)>& sink) {
  const StepPlan plan = plan_steps(config);
  Stepper stepper(config);
  WignerField w = config.initial_field ? *config.initial_field : make_state(config.initial, config.grid);
  auto emit = [&](double t) { sink(Frame{t, w, diagnostics(w, 1.0, config.exec)}); };
  emit(0.0);
  for (long k = 1; k <= plan.steps; ++k) {
    stepper.step(w.values, plan.dt);
    const double t = k == plan.steps ? config.t_end : k * plan.dt;
    fail_unless_finite(w.values, config.exec, t);
    if (k % config.frame_stride == 0 || k == plan.steps) emit(t);
  }
}

std::vector<Frame> evolve(const EvolutionConfig& config) {
  std::vector<Frame> frames;
  evolve(config, [&](const Frame& f) { frames.push_back(f); });
  return frames;
}

}  // namespace wigner

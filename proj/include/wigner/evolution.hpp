#pragma once

// Method-of-lines integration of dW/dt = -div J with classical RK4. The
// Hamiltonian part is the full Moyal bracket (exact for polynomial H, hbar = 1),
// the optional bath part is -div J_env.

#include <functional>
#include <optional>
#include <vector>

#include "wigner/fields.hpp"

namespace wigner {

struct EvolutionConfig {
  PolySymbol hamiltonian;
  std::optional<BathParams> bath;
  StateSpec initial;
  // Overrides `initial` when set (e.g. a field read from a grid file).
  std::optional<WignerField> initial_field;
  PhaseSpaceGrid grid;
  std::optional<double> dt;  // default: 0.8 x stability limit
  double t_end = 0.0;
  int frame_stride = 1;
  bool bath_diffusion = true;  // test-only: false drops J_diff
  Exec exec = default_exec();
};

struct Frame {
  double t = 0.0;
  WignerField field;
  Diagnostics diag;
};

class Stepper {
 public:
  explicit Stepper(const EvolutionConfig& config);

  // Constant-coefficient part: Moyal flow and bath diffusion. The bath's
  // damping half is applied separately in divergence form.
  const CompiledOperator& generator() const { return op_; }
  // Largest dt for which RK4's stability region contains the spectral
  // estimate of the generator's spectrum.
  double stability_limit() const { return limit_; }
  double default_dt() const { return 0.8 * limit_; }

  void rhs(std::span<const cplx> w, std::span<cplx> out);
  void step(std::span<cplx> w, double dt);

 private:
  SpectralEngine engine_;
  CompiledOperator op_;
  double damping_;  // gamma/2, or 0 without a bath
  double limit_;
  std::vector<double> xs_, ps_;
  std::vector<cplx> work_, dwork_;
  std::vector<cplx> k1_, k2_, k3_, k4_, tmp_;
};

// apply_expr(moyal_bracket(H), W) - div env_current(W, bath), evaluated
// literally from the two pieces.
WignerField rhs(const WignerField& w, const PolySymbol& h, const std::optional<BathParams>& bath = std::nullopt,
                Exec exec = default_exec());

// One RK4 step of config.dt (default dt when unset).
WignerField step(const WignerField& w, const EvolutionConfig& config);

// Frames at t = 0, every frame_stride steps, and always at t_end. The step is
// shrunk so that an integer number of steps lands exactly on t_end. Throws
// ConfigError for an invalid config or an unstable dt, NumericBlowup on NaN/Inf.
std::vector<Frame> evolve(const EvolutionConfig& config);
void evolve(const EvolutionConfig& config, const std::function<void(const Frame&)>& sink);

// Number of RK4 steps evolve() takes, and the step it actually uses.
struct StepPlan {
  long steps = 0;
  double dt = 0.0;
};
StepPlan plan_steps(const EvolutionConfig& config);

}  // namespace wigner

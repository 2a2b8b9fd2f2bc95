// Serial reference vs OpenMP kernels on the evolution hot path.

#include <benchmark/benchmark.h>

#include "wigner/evolution.hpp"
#include "wigner/star.hpp"

using namespace wigner;

namespace {

EvolutionConfig damped(int n, Exec exec) {
  EvolutionConfig c;
  c.hamiltonian = PolySymbol::monomial(2, 0, CRat(rat(1, 2))) + PolySymbol::monomial(0, 2, CRat(rat(1, 2))) +
                  PolySymbol::monomial(4, 0, CRat(rat(1, 10)));
  c.bath = BathParams{0.2, 0.5};
  c.grid = PhaseSpaceGrid::square(8, n);
  c.exec = exec;
  return c;
}

void BM_apply(benchmark::State& state, Exec exec) {
  const PhaseSpaceGrid g = PhaseSpaceGrid::square(8, static_cast<int>(state.range(0)));
  const WignerField w = make_state(StateSpec::squeezed(0.3), g);
  SpectralEngine engine(g, exec);
  CompiledOperator op = CompiledOperator::from(moyal_bracket(damped(g.nx, exec).hamiltonian, 1));
  op += bath_operator(BathParams{0.2, 0.5});
  std::vector<cplx> out(g.size());
  for (auto _ : state) {
    engine.apply(op, w.values, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.size()));
}

void BM_step(benchmark::State& state, Exec exec) {
  const EvolutionConfig c = damped(static_cast<int>(state.range(0)), exec);
  WignerField w = make_state(StateSpec::squeezed(0.3), c.grid);
  Stepper s(c);
  const double dt = s.default_dt();
  for (auto _ : state) {
    s.step(w.values, dt);
    benchmark::DoNotOptimize(w.values.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(c.grid.size()));
}

void BM_moments(benchmark::State& state, Exec exec) {
  const PhaseSpaceGrid g = PhaseSpaceGrid::square(8, static_cast<int>(state.range(0)));
  const WignerField w = make_state(StateSpec::squeezed(0.3), g);
  SpectralEngine engine(g, exec);
  for (auto _ : state) benchmark::DoNotOptimize(engine.moments(w.values));
}

}  // namespace

BENCHMARK_CAPTURE(BM_apply, serial, Exec::Serial)->Arg(128)->Arg(256);
BENCHMARK_CAPTURE(BM_apply, omp, Exec::Parallel)->Arg(128)->Arg(256);
BENCHMARK_CAPTURE(BM_step, serial, Exec::Serial)->Arg(128)->Arg(256);
BENCHMARK_CAPTURE(BM_step, omp, Exec::Parallel)->Arg(128)->Arg(256);
BENCHMARK_CAPTURE(BM_moments, serial, Exec::Serial)->Arg(128)->Arg(256);
BENCHMARK_CAPTURE(BM_moments, omp, Exec::Parallel)->Arg(128)->Arg(256);

BENCHMARK_MAIN();

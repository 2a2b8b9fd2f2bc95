#include <doctest.h>

#include <cmath>
#include <numbers>

#include "support.hpp"
#include "wigner/evolution.hpp"

using namespace wigner;
using testing::Rng;

namespace {

PolySymbol oscillator() {
  return PolySymbol::monomial(2, 0, CRat(rat(1, 2))) + PolySymbol::monomial(0, 2, CRat(rat(1, 2)));
}

double max_abs(const WignerField& w) {
  double m = 0.0;
  for (const cplx& v : w.values) m = std::max(m, std::abs(v));
  return m;
}

EvolutionConfig harmonic(const StateSpec& s, const PhaseSpaceGrid& g, double t_end) {
  EvolutionConfig c;
  c.hamiltonian = oscillator();
  c.initial = s;
  c.grid = g;
  c.t_end = t_end;
  return c;
}

// Squeezed state rotated by the oscillator flow x' = p, p' = -x.
double rotated_squeezed(double r, double phi, double t, double x, double p) {
  const double c = std::cos(t), s = std::sin(t);
  return state_value(StateSpec::squeezed(r, phi), x * c - p * s, x * s + p * c);
}

}  // namespace

TEST_CASE("right-hand side") {
  const PhaseSpaceGrid g = PhaseSpaceGrid::square(8, 128);
  const WignerField vac = make_state(StateSpec::vacuum(), g);
  CHECK(max_abs(rhs(vac, oscillator())) <= 1e-12);

  const WignerField th = make_state(StateSpec::thermal(0.5), g);
  CHECK(max_abs(rhs(th, oscillator(), BathParams{0.2, 0.5})) <= 1e-8);
  CHECK(max_abs(rhs(th, oscillator(), BathParams{0.2, 0.1})) > 1e-3);

  // Quadratic H: Moyal flow is the Poisson flow, with dW/dx = -2 (x - x0) W.
  const StateSpec coh = StateSpec::coherent(1.0);
  const WignerField w = make_state(coh, g);
  const WignerField out = rhs(w, oscillator());
  const double x0 = std::sqrt(2.0);
  double err = 0.0;
  for (int j = 0; j < g.np; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const double x = g.x(i), p = g.p(j), v = w.at(i, j).real();
      const double dx = -2 * (x - x0) * v, dp = -2 * p * v;
      err = std::max(err, std::abs(out.at(i, j) + (p * dx - x * dp)));
    }
  CHECK(err <= 1e-8);
}

TEST_CASE("rhs integrates to zero and matches the compiled stepper") {
  Rng rng(61);
  const PhaseSpaceGrid g = PhaseSpaceGrid::square(8, 128);
  const WignerField w = make_state(StateSpec::squeezed(0.25, 0.3), g);
  for (int k = 0; k < 8; ++k) {
    PolySymbol h = testing::random_poly(rng, 4, 4);
    h = (h + h.conj()) * CRat(rat(1, 2));
    const BathParams bath{rng.real(0.0, 0.5), rng.real(0.0, 2.0), rng.real(0.5, 2.0), rng.real(0.5, 1.5)};
    const WignerField out = rhs(w, h, bath);
    CHECK(std::abs(integral(out)) <= 1e-9);

    EvolutionConfig c;
    c.hamiltonian = h;
    c.bath = bath;
    c.grid = g;
    Stepper s(c);
    WignerField fast(g);
    s.rhs(w.values, fast.values);
    CHECK(linf_distance(fast, out) <= 1e-10 * std::max(1.0, max_abs(out)));
  }
}

TEST_CASE("single steps") {
  const PhaseSpaceGrid g = PhaseSpaceGrid::square(8, 64);
  EvolutionConfig c = harmonic(StateSpec::coherent({0.5, 0.5}), g, 1.0);
  c.bath = BathParams{0.3, 0.2};
  const WignerField w = make_state(c.initial, g);

  EvolutionConfig zero = c;
  Stepper s0(zero);
  WignerField same = w;
  s0.step(same.values, 0.0);
  CHECK(same.values == w.values);

  c.dt = 0.005;
  const WignerField a = step(w, c);
  CHECK(std::abs(integral(a) - integral(w)) <= 1e-9);

  // Linear in W.
  const WignerField v = make_state(StateSpec::squeezed(0.2), g);
  WignerField comb = w;
  for (size_t k = 0; k < comb.values.size(); ++k) comb.values[k] = 2.0 * w.values[k] - 0.5 * v.values[k];
  const WignerField b = step(v, c), ab = step(comb, c);
  double err = 0.0;
  for (size_t k = 0; k < ab.values.size(); ++k) err = std::max(err, std::abs(ab.values[k] - (2.0 * a.values[k] - 0.5 * b.values[k])));
  CHECK(err <= 1e-13);

  // Vacuum is a fixed point of the closed oscillator.
  const PhaseSpaceGrid big = PhaseSpaceGrid::square(8, 128);
  EvolutionConfig vc = harmonic(StateSpec::vacuum(), big, 1.0);
  const WignerField vac = make_state(StateSpec::vacuum(), big);
  CHECK(linf_distance(step(vac, vc), vac) <= 1e-10);
}

TEST_CASE("RK4 convergence order") {
  // Richardson: global error at fixed T, and one step versus two half steps.
  const PhaseSpaceGrid g = PhaseSpaceGrid::square(8, 64);
  EvolutionConfig c = harmonic(StateSpec::squeezed(0.3, 0.4), g, 0.4);
  auto run = [&](double dt) {
    EvolutionConfig k = c;
    k.dt = dt;
    k.frame_stride = 1000000;
    return evolve(k).back().field;
  };
  const double dt = 0.01;
  const WignerField w1 = run(dt), w2 = run(dt / 2), w4 = run(dt / 4);
  const double global = std::log2(l2_distance(w1, w2) / l2_distance(w2, w4));
  CHECK(global == doctest::Approx(4.0).epsilon(0.05));

  const WignerField w0 = make_state(c.initial, g);
  auto local = [&](double h) {
    Stepper s(c);
    WignerField one = w0, two = w0;
    s.step(one.values, h);
    s.step(two.values, h / 2);
    s.step(two.values, h / 2);
    return l2_distance(one, two);
  };
  const double local_order = std::log2(local(dt) / local(dt / 2));
  CHECK(local_order == doctest::Approx(5.0).epsilon(0.04));
}

TEST_CASE("quadratic flow is a rigid rotation") {
  const PhaseSpaceGrid g = PhaseSpaceGrid::square(8, 128);
  const double r = 0.3, phi = 0.2, t = 0.7;
  const std::vector<Frame> frames = evolve(harmonic(StateSpec::squeezed(r, phi), g, t));
  const WignerField& end = frames.back().field;
  const WignerField start = make_state(StateSpec::squeezed(r, phi), g);
  const double norm = state_value(StateSpec::squeezed(r, phi), g.x(70), g.p(60)) / start.at(70, 60).real();
  double err = 0.0;
  for (int j = 0; j < g.np; ++j)
    for (int i = 0; i < g.nx; ++i)
      err = std::max(err, std::abs(end.at(i, j) - rotated_squeezed(r, phi, t, g.x(i), g.p(j)) / norm));
  CHECK(err <= 1e-5);
}

TEST_CASE("frames and step planning") {
  const PhaseSpaceGrid g = PhaseSpaceGrid::square(8, 64);
  EvolutionConfig c = harmonic(StateSpec::coherent(0.5), g, 0.1);
  c.dt = 0.003;
  c.frame_stride = 10;
  const StepPlan plan = plan_steps(c);
  CHECK(plan.steps == 34);
  CHECK(plan.dt * 34 == doctest::Approx(0.1));
  const std::vector<Frame> frames = evolve(c);
  REQUIRE(frames.size() == 5);  // 0, 10, 20, 30, 34
  CHECK(frames.front().t == 0.0);
  CHECK(frames.back().t == 0.1);
  for (size_t k = 1; k < frames.size(); ++k) CHECK(frames[k].t > frames[k - 1].t);
  for (const Frame& f : frames) CHECK(f.diag.norm == doctest::Approx(diagnostics(f.field).norm));

  EvolutionConfig exact = c;
  exact.t_end = 2 * std::numbers::pi;
  exact.dt = 2 * std::numbers::pi / 2000;
  CHECK(plan_steps(exact).steps == 2000);

  EvolutionConfig none = c;
  none.t_end = 0.0;
  const std::vector<Frame> one = evolve(none);
  REQUIRE(one.size() == 1);
  CHECK(one[0].field.values == make_state(c.initial, g).values);
}

TEST_CASE("zero coupling is the closed trajectory bit for bit") {
  const PhaseSpaceGrid g = PhaseSpaceGrid::square(8, 64);
  EvolutionConfig closed = harmonic(StateSpec::squeezed(0.3), g, 0.2);
  EvolutionConfig open = closed;
  open.bath = BathParams{0.0, 3.0};
  const auto a = evolve(closed), b = evolve(open);
  REQUIRE(a.size() == b.size());
  for (size_t k = 0; k < a.size(); ++k) CHECK(a[k].field.values == b[k].field.values);
}

TEST_CASE("configuration errors") {
  const PhaseSpaceGrid g = PhaseSpaceGrid::square(8, 64);
  EvolutionConfig c = harmonic(StateSpec::vacuum(), g, 1.0);
  Stepper s(c);
  CHECK(s.stability_limit() > 0.0);
  CHECK(s.default_dt() == doctest::Approx(0.8 * s.stability_limit()));
  c.dt = 1.5 * s.stability_limit();
  CHECK_THROWS_AS(plan_steps(c), ConfigError);
  c.dt = -1.0;
  CHECK_THROWS_AS(plan_steps(c), ConfigError);
  c.dt.reset();
  c.frame_stride = 0;
  CHECK_THROWS_AS(evolve(c), ConfigError);
  c.frame_stride = 1;
  c.hamiltonian = PolySymbol::monomial(1, 1, CRat(0, 1));
  CHECK_THROWS_AS(evolve(c), ConfigError);
}

TEST_CASE("non-finite values abort with the time stamp") {
  const PhaseSpaceGrid g = PhaseSpaceGrid::square(8, 32);
  EvolutionConfig c = harmonic(StateSpec::vacuum(), g, 1.0);
  WignerField bad = make_state(StateSpec::vacuum(), g);
  bad.at(3, 4) = std::nan("");
  c.initial_field = bad;
  c.dt = 0.01;
  try {
    evolve(c);
    FAIL("expected NumericBlowup");
  } catch (const NumericBlowup& e) {
    CHECK(e.time() == doctest::Approx(0.01));
    CHECK(std::string(e.what()).find("t = 0.01") != std::string::npos);
  }
}

TEST_CASE("damping without diffusion over-concentrates the state") {
  // Both halves of J_env are needed: drop J_diff and the vacuum contracts
  // below the uncertainty limit.
  const PhaseSpaceGrid g = PhaseSpaceGrid::square(6, 128);
  EvolutionConfig c = harmonic(StateSpec::vacuum(), g, 5.0);
  const double gamma = 0.5;
  c.bath = BathParams{gamma, 0.0};
  c.bath_diffusion = false;
  c.frame_stride = 50;
  const std::vector<Frame> frames = evolve(c);
  double peak = 0.0;
  for (const Frame& f : frames) peak = std::max(peak, f.diag.purity);
  CHECK(frames.back().t <= 10 / gamma);
  CHECK(peak > 1.05);

  // With both halves the vacuum stays put.
  c.bath_diffusion = true;
  const std::vector<Frame> kept = evolve(c);
  for (const Frame& f : kept) CHECK(f.diag.purity <= 1 + 1e-6);
}

TEST_CASE("long damped runs stay bounded at the box seam") {
  // In (x d_x + 1) form the periodic seam amplifies round-off at rate gamma;
  // e^60 would turn 1e-17 into order-one garbage well before t_end.
  const PhaseSpaceGrid g = PhaseSpaceGrid::square(8, 48);
  EvolutionConfig c = harmonic(StateSpec::coherent(1.0), g, 60.0);
  c.bath = BathParams{1.0, 0.0};
  c.frame_stride = 1 << 30;
  const std::vector<Frame> f = evolve(c);
  const Diagnostics& d = f.back().diag;
  CHECK(std::abs(d.norm - 1.0) <= 1e-12);
  CHECK(d.min_value >= -1e-8);  // spectral floor of a 48-point Gaussian
  CHECK(d.var_x == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(d.purity == doctest::Approx(1.0).epsilon(1e-8));
}

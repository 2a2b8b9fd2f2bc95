#pragma once

#include <complex>
#include <string>
#include <vector>

namespace wigner {

using cplx = std::complex<double>;

// Uniform periodic sampling of the (x, p) plane in units hbar = m = omega = 1.
// Points are x_i = x_min + i dx, i = 0..nx-1 (x_max itself excluded).
struct PhaseSpaceGrid {
  double x_min = -6.0;
  double x_max = 6.0;
  double p_min = -6.0;
  double p_max = 6.0;
  int nx = 256;
  int np = 256;

  static PhaseSpaceGrid square(double half_width, int n) { return {-half_width, half_width, -half_width, half_width, n, n}; }

  // Throws std::invalid_argument on an empty box or non-positive sizes.
  void validate() const;

  double dx() const { return (x_max - x_min) / nx; }
  double dp() const { return (p_max - p_min) / np; }
  double x(int i) const { return x_min + i * dx(); }
  double p(int j) const { return p_min + j * dp(); }
  size_t size() const { return static_cast<size_t>(nx) * static_cast<size_t>(np); }

  bool operator==(const PhaseSpaceGrid&) const = default;
};

// Sampled Wigner function, row-major with x varying fastest: values[j*nx + i].
struct WignerField {
  PhaseSpaceGrid grid;
  std::vector<cplx> values;
  std::string label;

  WignerField() = default;
  explicit WignerField(const PhaseSpaceGrid& g, std::string name = {})
      : grid(g), values(g.size()), label(std::move(name)) {}

  cplx& at(int i, int j) { return values[static_cast<size_t>(j) * grid.nx + i]; }
  const cplx& at(int i, int j) const { return values[static_cast<size_t>(j) * grid.nx + i]; }
};

struct CurrentField {
  PhaseSpaceGrid grid;
  std::vector<double> jx;
  std::vector<double> jp;

  CurrentField() = default;
  explicit CurrentField(const PhaseSpaceGrid& g) : grid(g), jx(g.size()), jp(g.size()) {}
};

// Environment coupling of the damped oscillator master equation.
struct BathParams {
  double gamma = 0.0;   // damping rate
  double nbar = 0.0;    // thermal occupation
  double omega0 = 1.0;
  double hbar = 1.0;

  void validate() const;
};

enum class StateKind { vacuum, coherent, squeezed, fock, thermal };

struct StateSpec {
  StateKind kind = StateKind::vacuum;
  cplx alpha = 0.0;  // coherent displacement, a = (x + i p)/sqrt(2)
  double r = 0.0;    // squeezing magnitude
  double phi = 0.0;  // squeezing axis angle
  int n = 0;         // Fock number
  double nbar = 0.0; // thermal occupation

  static StateSpec vacuum() { return {}; }
  static StateSpec coherent(cplx a) { return {StateKind::coherent, a}; }
  static StateSpec squeezed(double r, double phi = 0.0) { return {StateKind::squeezed, 0.0, r, phi}; }
  static StateSpec fock(int n) { return {StateKind::fock, 0.0, 0.0, 0.0, n}; }
  static StateSpec thermal(double nbar) { return {StateKind::thermal, 0.0, 0.0, 0.0, 0, nbar}; }
};

std::string to_string(StateKind k);
StateKind state_kind_from_name(const std::string& name);  // throws std::invalid_argument

// Closed-form, analytically normalized Wigner function.
double state_value(const StateSpec& spec, double x, double p);

// Samples the state and renormalizes it to unit midpoint integral. Throws
// GridTooSmall when boundary values exceed 1e-12 of the peak.
WignerField make_state(const StateSpec& spec, const PhaseSpaceGrid& grid);

// max |W| on the outermost rows/columns divided by max |W|.
double boundary_ratio(const WignerField& w);

struct Diagnostics {
  double norm = 0.0;
  double mean_x = 0.0;
  double mean_p = 0.0;
  double var_x = 0.0;
  double var_p = 0.0;
  double purity = 0.0;  // 2 pi hbar int W^2
  double min_value = 0.0;
};

}  // namespace wigner

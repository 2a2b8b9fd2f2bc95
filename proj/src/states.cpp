#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "wigner/errors.hpp"
#include "wigner/grid.hpp"

namespace wigner {

namespace {

constexpr double kBoundaryTolerance = 1e-12;

// Normalized Gaussian with mean (x0, p0) and covariance [[sxx, sxp], [sxp, spp]].
double gaussian(double x, double p, double x0, double p0, double sxx, double sxp, double spp) {
  const double det = sxx * spp - sxp * sxp;
  const double u = x - x0, v = p - p0;
  const double q = (spp * u * u - 2.0 * sxp * u * v + sxx * v * v) / det;
  return std::exp(-0.5 * q) / (2.0 * std::numbers::pi * std::sqrt(det));
}

}  // namespace

std::string to_string(StateKind k) {
  switch (k) {
    case StateKind::vacuum: return "vacuum";
    case StateKind::coherent: return "coherent";
    case StateKind::squeezed: return "squeezed";
    case StateKind::fock: return "fock";
    case StateKind::thermal: return "thermal";
  }
  return "?";
}

StateKind state_kind_from_name(const std::string& name) {
  for (StateKind k : {StateKind::vacuum, StateKind::coherent, StateKind::squeezed, StateKind::fock, StateKind::thermal})
    if (to_string(k) == name) return k;
  throw std::invalid_argument("unknown state kind '" + name + "'");
}

double state_value(const StateSpec& s, double x, double p) {
  switch (s.kind) {
    case StateKind::vacuum: return gaussian(x, p, 0.0, 0.0, 0.5, 0.0, 0.5);
    case StateKind::thermal: {
      const double var = s.nbar + 0.5;
      return gaussian(x, p, 0.0, 0.0, var, 0.0, var);
    }
    case StateKind::coherent:
      return gaussian(x, p, std::numbers::sqrt2 * s.alpha.real(), std::numbers::sqrt2 * s.alpha.imag(), 0.5, 0.0, 0.5);
    case StateKind::squeezed: {
      // R(phi) diag(e^{-2r}/2, e^{2r}/2) R(phi)^T
      const double a = std::exp(-2.0 * s.r) / 2.0, b = std::exp(2.0 * s.r) / 2.0;
      const double c = std::cos(s.phi), sn = std::sin(s.phi);
      return gaussian(x, p, 0.0, 0.0, a * c * c + b * sn * sn, (a - b) * c * sn, a * sn * sn + b * c * c);
    }
    case StateKind::fock: {
      const double r2 = x * x + p * p;
      const double sign = s.n % 2 == 0 ? 1.0 : -1.0;
      return sign / std::numbers::pi * std::exp(-r2) * std::laguerre(static_cast<unsigned>(s.n), 2.0 * r2);
    }
  }
  return 0.0;
}

double boundary_ratio(const WignerField& w) {
  const int nx = w.grid.nx, np = w.grid.np;
  double peak = 0.0, edge = 0.0;
  for (int j = 0; j < np; ++j)
    for (int i = 0; i < nx; ++i) {
      const double v = std::abs(w.at(i, j));
      peak = std::max(peak, v);
      if (i == 0 || j == 0 || i == nx - 1 || j == np - 1) edge = std::max(edge, v);
    }
  return peak > 0.0 ? edge / peak : 0.0;
}

WignerField make_state(const StateSpec& spec, const PhaseSpaceGrid& grid) {
  grid.validate();
  if (!std::isfinite(spec.alpha.real()) || !std::isfinite(spec.alpha.imag()) || !std::isfinite(spec.r) ||
      !std::isfinite(spec.phi) || !std::isfinite(spec.nbar))
    throw std::invalid_argument("state parameters must be finite");
  if (spec.kind == StateKind::fock && spec.n < 0) throw std::invalid_argument("Fock number must be >= 0");
  if (spec.kind == StateKind::thermal && !(spec.nbar >= 0.0)) throw std::invalid_argument("thermal nbar must be >= 0");

  WignerField w(grid, to_string(spec.kind));
  double total = 0.0;
  for (int j = 0; j < grid.np; ++j) {
    double row = 0.0;
    for (int i = 0; i < grid.nx; ++i) {
      const double v = state_value(spec, grid.x(i), grid.p(j));
      w.at(i, j) = v;
      row += v;
    }
    total += row;
  }
  const double ratio = boundary_ratio(w);
  if (ratio > kBoundaryTolerance) {
    std::ostringstream msg;
    msg << "grid too small for " << to_string(spec.kind) << " state: boundary/peak = " << ratio
        << " exceeds " << kBoundaryTolerance;
    throw GridTooSmall(msg.str(), ratio);
  }
  const double norm = total * grid.dx() * grid.dp();
  for (cplx& v : w.values) v /= norm;
  return w;
}

}  // namespace wigner

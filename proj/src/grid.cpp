#include <cmath>

#include "wigner/errors.hpp"
#include "wigner/grid.hpp"

namespace wigner {

void PhaseSpaceGrid::validate() const {
  if (!(std::isfinite(x_min) && std::isfinite(x_max) && std::isfinite(p_min) && std::isfinite(p_max)))
    throw ConfigError("grid bounds must be finite");
  if (!(x_max > x_min) || !(p_max > p_min)) throw ConfigError("grid box is empty: need x_max > x_min and p_max > p_min");
  if (nx < 2 || np < 2) throw ConfigError("grid needs at least 2 points per axis");
}

void BathParams::validate() const {
  if (!std::isfinite(gamma) || !std::isfinite(nbar) || !std::isfinite(omega0) || !std::isfinite(hbar))
    throw ConfigError("bath parameters must be finite");
  if (!(gamma >= 0.0)) throw ConfigError("bath gamma must be >= 0");
  if (!(nbar >= 0.0)) throw ConfigError("bath nbar must be >= 0");
  if (!(omega0 > 0.0)) throw ConfigError("bath omega0 must be > 0");
  if (!(hbar > 0.0)) throw ConfigError("bath hbar must be > 0");
}

}  // namespace wigner

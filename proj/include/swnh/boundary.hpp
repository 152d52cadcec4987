#pragma once

#include <functional>

namespace swnh {

enum class BoundaryKind {
  wall,        // impermeable: mirror ghost depth, negated velocity
  periodic,    // both ends wrap (must be set on both sides)
  given_flux,  // imposed discharge Q0 (possibly time dependent), depth copied
  given_depth, // imposed depth H0, discharge copied
};

/// One side's boundary condition. `value` is Q0 (m^2/s) for given_flux or
/// H0 (m) for given_depth; `time_series`, when set, supersedes `value` for
/// given_flux (used by the entering-soliton inflow).
struct BoundaryCondition {
  BoundaryKind kind = BoundaryKind::wall;
  double value = 0.0;
  std::function<double(double)> time_series;
  // Vertical velocity carried in by an inflow (given_flux): w is transported
  // with the flow, so at an inlet its upwind value must be supplied from
  // outside. Unset means the ghost copies the interior value (zero-gradient),
  // which is exact only for hydrostatic inflow (w = 0 upstream).
  std::function<double(double)> w_series;
  // Non-hydrostatic pressure at a given_flux boundary face. Unset means the
  // homogeneous choice p = 0, which keeps the imposed discharge untouched by
  // the correction but deposits a mesh-independent error when the inflow
  // actually carries pressure (e.g. a wave entering through the boundary).
  std::function<double(double)> p_series;

  double eval(double t) const { return time_series ? time_series(t) : value; }
};

}  // namespace swnh

#pragma once

#include <vector>

#include "swnh/boundary.hpp"
#include "swnh/grid.hpp"
#include "swnh/sw_operators.hpp"

namespace swnh {

/// Direct solve of a TriDiagSystem: Thomas algorithm with a partial-pivoting
/// banded fallback; cyclic systems via Sherman-Morrison. Throws NumericalError
/// when a pivot falls below 1e-14 times the matrix scale.
std::vector<double> solve_tridiag(const TriDiagSystem& sys);

/// Outcome of one correction step.
struct CorrectionReport {
  double max_div_residual = 0;  // max |div_sw(u^{n+1})| over active faces (1/s)
  int clipped_faces = 0;        // faces zeroed by the positivity constraint
  double max_abs_u = 0;         // max |u^{n+1}| over wet cells (residual scale)
};

/// Solves the elliptic face-pressure system
///   div_sw( (1/H) grad_sw p ) = (1/dt) div_sw(u^{n+1/2})
/// assembled as the SPD composition E p = -(dxf/dt) div(u^{n+1/2}).
/// At a given_flux boundary the face pressure is prescribed (Dirichlet);
/// p_in_left / p_in_right supply the value there, default homogeneous (0),
/// which leaves the imposed discharge untouched by the correction.
FacePressure solve_pressure(const CellState& state_half, const Bathymetry& bathy,
                            const Grid& grid, double dt, BoundaryKind bc_left,
                            BoundaryKind bc_right,
                            const OperatorParams& params = {},
                            double p_in_left = 0.0, double p_in_right = 0.0);

/// Total-pressure positivity constraint: faces where
/// (g/2) min(H_i, H_{i+1}) + p <= 0 get p = 0 (no re-solve). Returns the list
/// of faces actually changed (already-zero faces do not count). A clipped wrap
/// face of a periodic domain is reported once, as face 0.
std::vector<int> enforce_pressure_positivity(FacePressure& p,
                                             const CellState& state_half,
                                             double g, bool periodic = false);

/// Velocity correction u^{n+1} = u^{n+1/2} - dt * grad_sw_eps(p); H unchanged,
/// dry cells untouched.
CellState correct_velocity(const CellState& state_half, const FacePressure& p,
                           const Bathymetry& bathy, const Grid& grid, double dt,
                           const OperatorParams& params = {},
                           bool periodic = false);

/// Max |div_sw| over all interior faces of a state. Note that faces straddling
/// a wet/dry front carry no constraint and dominate this number there — the
/// per-step report instead maxes over active faces.
double divergence_residual(const CellState& state, const Bathymetry& bathy,
                           const Grid& grid, const OperatorParams& params = {},
                           bool periodic = false);

/// Full correction step: solve, clip, correct, and report the post-correction
/// residual over the faces where the constraint is enforced: interior wet
/// faces, minus clipped faces and the faces sharing a cell with a clipped
/// face (the single clip, with no re-solve, deliberately gives up div = 0
/// on that neighborhood).
CellState correction_step(const CellState& state_half, const Bathymetry& bathy,
                          const Grid& grid, double dt, BoundaryKind bc_left,
                          BoundaryKind bc_right, const OperatorParams& params,
                          FacePressure& p_out, CorrectionReport& report,
                          double p_in_left = 0.0, double p_in_right = 0.0);

}  // namespace swnh

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "swnh/boundary.hpp"
#include "swnh/grid.hpp"

namespace swnh {

/// Hydrostatic reconstruction at one interface: z* = max(zb_L, zb_R),
/// H_minus = (H_L + zb_L - z*)_+, H_plus = (H_R + zb_R - z*)_+.
struct ReconstructedPair {
  double h_minus = 0, h_plus = 0, z_star = 0;
};
ReconstructedPair hydrostatic_reconstruct(double h_left, double zb_left,
                                          double h_right, double zb_right);

/// One side's primitive trace at a face (cell value at first order, limited
/// extrapolation at second order).
struct FaceTrace {
  double h = 0, u = 0, w = 0, zb = 0;
};

/// Interface fluxes seen by the two adjacent cells. Mass and vertical-momentum
/// components are shared; only the horizontal momentum flux carries the
/// per-side hydrostatic-reconstruction correction g/2 (H_side^2 - H_±^2).
struct InterfaceFluxes {
  double f_h = 0;         // shared mass flux
  double f_qx_minus = 0;  // momentum flux seen by the left cell
  double f_qx_plus = 0;   // momentum flux seen by the right cell
  double f_qz = 0;        // shared vertical-momentum flux (upwinded w)
};
InterfaceFluxes interface_fluxes(const FaceTrace& left, const FaceTrace& right,
                                 double g);

/// CFL time step: cfl * min_i dx_i / max_i(|u_i| + sqrt(2 g H_i)), using the
/// kinetic wave-speed bound (support radius of the Maxwellian). All-dry states
/// return max_dt.
double stable_dt(const CellState& state, const Grid& grid, double cfl, double g,
                 double max_dt);

/// Optional vertical-momentum source s(x, t): the prediction step adds
/// dt * H_i^n * s(x_i, t^n) to qz (the parabolic-bowl forcing).
using SourceFn = std::function<double(double, double)>;

/// Limited second-order traces at every face: index j holds the minus (left)
/// and plus (right) states of face j. Reconstructed variables are
/// (H, u, w, H + z_b) with minmod slopes; H is clipped at 0 and zb recomposed
/// as (H + zb) - H.
struct FaceTraces {
  std::vector<FaceTrace> minus, plus;  // size I+1
};

/// Standalone limited reconstruction (spec'd operation): boundary cells use
/// zero slopes. The prediction step itself reconstructs on ghost-extended
/// arrays instead, so boundary cells see proper neighbors.
FaceTraces muscl_reconstruct(const CellState& state, const Bathymetry& bathy,
                             const Grid& grid);

/// Explicit finite-volume prediction step (hyperbolic part, no pressure):
/// hydrostatic-reconstruction well-balanced kinetic fluxes, upwinded qz
/// transport, optional qz source, order 1 or 2 in space. Throws
/// NumericalError naming the first cell driven below -1e-12 (CFL violation);
/// tiny negative round-off is flushed to 0.
CellState prediction_step(const CellState& state, const Bathymetry& bathy,
                          const Grid& grid, const BoundaryCondition& bc_left,
                          const BoundaryCondition& bc_right, double t, double dt,
                          int order, double g,
                          const SourceFn& source = nullptr);

/// Ghost-extended primitive arrays (two ghost cells per side) used by the
/// prediction step; exposed for boundary-condition tests. Index k corresponds
/// to cell k-2.
struct GhostedPrimitives {
  std::vector<double> h, u, w, zb;  // size I+4
};
GhostedPrimitives fill_ghosts(const CellState& state, const Bathymetry& bathy,
                              const Grid& grid, const BoundaryCondition& bc_left,
                              const BoundaryCondition& bc_right, double t,
                              double g);

}  // namespace swnh

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "swnh/boundary.hpp"
#include "swnh/grid.hpp"

namespace swnh {

/// Parameters of the shallow-water operator family. alpha = 2 is the full
/// depth-averaged Euler model; alpha = 3/2 over a flat bottom is the classical
/// Green-Naghdi dispersion. epsilon regularizes division by small depths in
/// the velocity correction.
struct OperatorParams {
  double alpha = 2.0;
  double epsilon = 1e-6;
  double g = 9.81;  // only the pressure positivity constraint reads this
};

/// zeta_i = (H_i + 2 z_b,i) / 2, the combination the discrete operators weigh
/// pressure differences with.
std::vector<double> zeta_of(std::span<const double> h, std::span<const double> zb);

/// Per-cell shallow-water gradient of a face pressure field:
///   comp1 = [ H_i (p_{i+1/2} - p_{i-1/2}) + p_{i+1/2}(zeta_{i+1} - zeta_i)
///             + p_{i-1/2}(zeta_i - zeta_{i-1}) ] / dx_i
///   comp2 = -(alpha/2) (dxf_{i+1/2} p_{i+1/2} + dxf_{i-1/2} p_{i-1/2}) / dx_i
/// At the boundary cells the missing neighbor zeta extends flat (its weight
/// multiplies a boundary-face pressure, pinned to zero in every non-periodic
/// configuration); periodic wraps all indices and identifies face I with 0.
struct SwGradient {
  std::vector<double> comp1, comp2;  // per cell
};
SwGradient grad_sw(std::span<const double> p, std::span<const double> h,
                   std::span<const double> zb, const Grid& grid,
                   const OperatorParams& params = {}, bool periodic = false);

/// Per-face shallow-water divergence (size I+1; non-periodic boundary entries
/// are 0, periodic stores the wrap face at both 0 and I):
///   div_{i+1/2} = [ (Hu)_{i+1} - (Hu)_i - (u_i + u_{i+1})(zeta_{i+1} - zeta_i)
///                   + (alpha/2) dxf_{i+1/2} (w_i + w_{i+1}) ] / dxf_{i+1/2}
std::vector<double> div_sw(std::span<const double> u, std::span<const double> w,
                           std::span<const double> h, std::span<const double> zb,
                           const Grid& grid, const OperatorParams& params = {},
                           bool periodic = false);

/// Regularized correction direction (1/H) grad_sw with the substitutions of
/// the wet/dry treatment: the 1/H factors on the zeta terms become
/// 1_{H >= eps} / max(H, eps), and comp2's 1/H becomes 1/max(H, eps), so the
/// velocity correction never divides by a vanishing depth. Returns the per-cell
/// vector that multiplies -dt in the correction. Cells below kDryDepth get 0.
SwGradient grad_sw_eps(std::span<const double> p, std::span<const double> h,
                       std::span<const double> zb, const Grid& grid,
                       const OperatorParams& params = {}, bool periodic = false);

/// Tridiagonal system in face-pressure unknowns. Pinned (inactive) rows are
/// stored as identity rows with zero rhs. For periodic domains the system is
/// cyclic over I unknowns with the two corner couplings stored separately.
struct TriDiagSystem {
  std::vector<double> lower, diag, upper, rhs;
  std::vector<std::uint8_t> active;  // 1 = real constraint row, 0 = pinned p=0
  bool cyclic = false;
  double corner_lower = 0;  // A[0][n-1]
  double corner_upper = 0;  // A[n-1][0]

  int size() const { return static_cast<int>(diag.size()); }
};

/// Assembles the face-pressure operator E = B Lambda B^T (B the unscaled
/// discrete divergence, Lambda = diag(1/(H_i dx_i)) per velocity component),
/// built as the exact composition of div_sw with the regularized correction
/// direction so that the corrected velocity is divergence-free to solver
/// precision. Row j of E equals -dxf_j * Delta_sw,j p. Rows pinned to p = 0:
/// boundary faces for wall/given_flux, boundary plus first interior face for
/// given_depth, and faces where min(H_L, H_R) falls below either the
/// regularization depth epsilon or the depth jump |H_R - H_L|. The first case
/// covers vacuum columns and films where the regularized correction replaces
/// the true one; the second excludes unresolved wet/dry fronts, whose
/// constraint would otherwise be forced through a single face and drive its
/// pressure negative past the positivity bound. Both tests shrink the excluded
/// strip under refinement. The rhs is left zero (filled by the pressure
/// solve).
TriDiagSystem assemble_laplacian(std::span<const double> h,
                                 std::span<const double> zb, const Grid& grid,
                                 BoundaryKind bc_left, BoundaryKind bc_right,
                                 const OperatorParams& params = {});

/// d-remainder of the discrete duality identity at interior face j:
///   d_j = (p_j / 2) [ dxf_j (w_R - w_L) - (u_R - u_L)(zeta_R - zeta_L) ]
/// With (Hu)_j the arithmetic face mean, every cell satisfies exactly
///   dx_i grad_sw,i p . (u_i, w_i)
///     = [(Hu) p + d]_{right face} - [(Hu) p + d]_{left face}
///       - (dxf_j p_j div_j + dxf_{j'} p_{j'} div_{j'})/2.
double duality_remainder(std::span<const double> p, std::span<const double> u,
                         std::span<const double> w, std::span<const double> h,
                         std::span<const double> zb, const Grid& grid, int face);

}  // namespace swnh

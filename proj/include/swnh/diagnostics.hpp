#pragma once

#include <span>
#include <string>
#include <vector>

#include "swnh/grid.hpp"

namespace swnh {

/// Domain-summed mechanical energy
///   eta_total = sum dx_i [ H(u^2 + w^2)/2 + g H^2/2 + g H z_b ]
/// split into the hydrostatic part (no w) and the vertical kinetic part; the
/// two add up to the total by construction.
struct EnergyBreakdown {
  double eta_total = 0;
  double eta_hyd = 0;
  double kinetic_vertical = 0;
};
EnergyBreakdown total_energy(const CellState& state, const Bathymetry& bathy,
                             const Grid& grid, double g);

/// Mass sum dx_i H_i.
double total_mass(const CellState& state, const Grid& grid);

/// L1 distance between two sampled fields, normalized by the reference L1
/// norm when it exceeds 1e-14 (absolute otherwise).
double l1_error(std::span<const double> field, std::span<const double> reference,
                std::span<const double> dx);

/// Least-squares slope of log(error) against log(h). Non-positive errors are
/// excluded (with a note appended to *warnings when given); fewer than two
/// usable points is a ConfigError.
double convergence_order(std::span<const double> mesh_h,
                         std::span<const double> errors,
                         std::vector<std::string>* warnings = nullptr);

/// Pairwise orders log(e_k/e_{k+1}) / log(h_k/h_{k+1}); non-positive pairs
/// yield NaN entries.
std::vector<double> pairwise_orders(std::span<const double> mesh_h,
                                    std::span<const double> errors);

/// Total energy flux through an interface (energy-budget diagnostics):
///   G_hat = G_hyd(kinetic, reconstructed depths, z*) + F_H w_up^2/2
///           + (Hu)_mean p_face,
/// with w upwinded by the sign of F_H and (Hu)_mean the arithmetic mean of the
/// adjacent cell discharges.
double interface_energy_flux(double h_minus, double u_left, double w_left,
                             double qx_left, double h_plus, double u_right,
                             double w_right, double qx_right, double z_star,
                             double p_face, double g);

}  // namespace swnh

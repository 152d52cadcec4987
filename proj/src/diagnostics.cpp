#include "swnh/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "swnh/common.hpp"
#include "swnh/kinetic_flux.hpp"

namespace swnh {

EnergyBreakdown total_energy(const CellState& state, const Bathymetry& bathy,
                             const Grid& grid, double g) {
  EnergyBreakdown out;
  for (int i = 0; i < state.cells(); ++i) {
    const double h = state.h[i];
    double kin_x = 0.0, kin_z = 0.0;
    if (h >= kDryDepth) {
      kin_x = 0.5 * state.qx[i] * state.qx[i] / h;
      kin_z = 0.5 * state.qz[i] * state.qz[i] / h;
    }
    const double pot = 0.5 * g * h * h + g * h * bathy.zb[i];
    out.eta_hyd += grid.dx[i] * (kin_x + pot);
    out.kinetic_vertical += grid.dx[i] * kin_z;
  }
  out.eta_total = out.eta_hyd + out.kinetic_vertical;
  return out;
}

double total_mass(const CellState& state, const Grid& grid) {
  double m = 0.0;
  for (int i = 0; i < state.cells(); ++i) m += grid.dx[i] * state.h[i];
  return m;
}

double l1_error(std::span<const double> field, std::span<const double> reference,
                std::span<const double> dx) {
  if (field.size() != reference.size() || field.size() != dx.size())
    throw ConfigError("l1_error: mismatched field sizes");
  double err = 0.0, norm = 0.0;
  for (std::size_t i = 0; i < field.size(); ++i) {
    err += dx[i] * std::abs(field[i] - reference[i]);
    norm += dx[i] * std::abs(reference[i]);
  }
  return norm > 1e-14 ? err / norm : err;
}

double convergence_order(std::span<const double> mesh_h,
                         std::span<const double> errors,
                         std::vector<std::string>* warnings) {
  if (mesh_h.size() != errors.size())
    throw ConfigError("convergence_order: mismatched sizes");
  std::vector<double> lx, ly;
  for (std::size_t k = 0; k < mesh_h.size(); ++k) {
    if (!(errors[k] > 0.0) || !(mesh_h[k] > 0.0)) {
      if (warnings)
        warnings->push_back("mesh h = " + std::to_string(mesh_h[k]) +
                            " excluded from the fit (non-positive error)");
      continue;
    }
    lx.push_back(std::log(mesh_h[k]));
    ly.push_back(std::log(errors[k]));
  }
  const std::size_t m = lx.size();
  if (m < 2)
    throw ConfigError(
        "convergence_order needs at least two meshes with positive error");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < m; ++k) {
    sx += lx[k];
    sy += ly[k];
    sxx += lx[k] * lx[k];
    sxy += lx[k] * ly[k];
  }
  const double denom = m * sxx - sx * sx;
  if (denom == 0.0)
    throw ConfigError("convergence_order: meshes have identical spacing");
  return (m * sxy - sx * sy) / denom;
}

std::vector<double> pairwise_orders(std::span<const double> mesh_h,
                                    std::span<const double> errors) {
  if (mesh_h.size() != errors.size())
    throw ConfigError("pairwise_orders: mismatched sizes");
  std::vector<double> out;
  for (std::size_t k = 0; k + 1 < mesh_h.size(); ++k) {
    if (errors[k] > 0.0 && errors[k + 1] > 0.0 && mesh_h[k] > 0.0 &&
        mesh_h[k + 1] > 0.0 && mesh_h[k] != mesh_h[k + 1]) {
      out.push_back(std::log(errors[k] / errors[k + 1]) /
                    std::log(mesh_h[k] / mesh_h[k + 1]));
    } else {
      out.push_back(std::numeric_limits<double>::quiet_NaN());
    }
  }
  return out;
}

double interface_energy_flux(double h_minus, double u_left, double w_left,
                             double qx_left, double h_plus, double u_right,
                             double w_right, double qx_right, double z_star,
                             double p_face, double g) {
  const double g_hyd =
      hydrostatic_entropy_flux(h_minus, u_left, h_plus, u_right, z_star, g);
  const HalfMoments up = positive_half_moments(h_minus, u_left, g);
  const HalfMoments down = negative_half_moments(h_plus, u_right, g);
  const double f_h = up.m1 + down.m1;
  const double w_up = f_h >= 0.0 ? w_left : w_right;
  const double hu_mean = 0.5 * (qx_left + qx_right);
  return g_hyd + 0.5 * f_h * w_up * w_up + hu_mean * p_face;
}

}  // namespace swnh

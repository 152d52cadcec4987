#pragma once

#include <functional>
#include <string>
#include <vector>

#include "swnh/common.hpp"

namespace swnh {

/// 1-D finite-volume grid. Cells i = 0..I-1, faces j = 0..I; face j sits
/// between cells j-1 and j. Face widths dxf[j] = xc[j] - xc[j-1] for interior
/// faces; boundary faces take the adjacent cell width so that a uniform grid
/// has dxf == dx everywhere.
struct Grid {
  std::vector<double> xc;   // cell centers
  std::vector<double> dx;   // cell widths
  std::vector<double> xf;   // face positions (size I+1)
  std::vector<double> dxf;  // face widths    (size I+1)

  int cells() const { return static_cast<int>(xc.size()); }
  double x_left() const { return xf.front(); }
  double x_right() const { return xf.back(); }
  double length() const { return xf.back() - xf.front(); }
};

/// Uniform grid over [domain_start, domain_end]. Throws ConfigError for
/// degenerate bounds or fewer than 3 cells (the stencils need two neighbors).
Grid build_uniform_grid(double domain_start, double domain_end, int cells);

/// Cell-averaged bottom elevation.
struct Bathymetry {
  std::vector<double> zb;
};

enum class BathyQuadrature { gauss2, midpoint };

/// Cell averages of an analytic profile, by 2-point Gauss (exact for
/// quadratics) or midpoint rule.
Bathymetry sample_bathymetry(const std::function<double(double)>& profile,
                             const Grid& grid,
                             BathyQuadrature quadrature = BathyQuadrature::gauss2);

/// Two-column text file (x  z_b), whitespace separated, '#' comments. The
/// profile is the piecewise-linear interpolant of the table (flat extension
/// outside its range), cell-averaged by exact integration.
Bathymetry load_bathymetry_table(const std::string& path, const Grid& grid);

/// Conserved variables per cell: depth H, horizontal discharge qx = H*u,
/// vertical discharge qz = H*w.
struct CellState {
  std::vector<double> h, qx, qz;

  CellState() = default;
  explicit CellState(int cells) : h(cells, 0.0), qx(cells, 0.0), qz(cells, 0.0) {}
  int cells() const { return static_cast<int>(h.size()); }
};

/// Velocity recovery with the dry-cell convention: u = qx/H and w = qz/H where
/// H >= kDryDepth, zero otherwise.
void primitive_velocities(const CellState& state, std::vector<double>& u,
                          std::vector<double>& w);

/// Non-hydrostatic pressure at faces (size I+1). For periodic runs entry I
/// mirrors entry 0.
struct FacePressure {
  std::vector<double> p;

  FacePressure() = default;
  explicit FacePressure(int faces) : p(faces, 0.0) {}
  int faces() const { return static_cast<int>(p.size()); }
};

}  // namespace swnh

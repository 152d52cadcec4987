#include "swnh/grid.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace swnh {

Grid build_uniform_grid(double domain_start, double domain_end, int cells) {
  if (!(domain_end > domain_start))
    throw ConfigError("grid: domain_end must exceed domain_start");
  if (cells < 3)
    throw ConfigError("grid: at least 3 cells required (stencil needs two neighbors)");

  Grid grid;
  const double width = (domain_end - domain_start) / cells;
  grid.xc.resize(cells);
  grid.dx.assign(cells, width);
  grid.xf.resize(cells + 1);
  grid.dxf.resize(cells + 1);
  for (int j = 0; j <= cells; ++j)
    grid.xf[j] = domain_start + j * width;
  grid.xf[cells] = domain_end;  // exact right bound
  for (int i = 0; i < cells; ++i)
    grid.xc[i] = domain_start + (i + 0.5) * width;
  for (int j = 1; j < cells; ++j)
    grid.dxf[j] = grid.xc[j] - grid.xc[j - 1];
  grid.dxf[0] = grid.dx.front();
  grid.dxf[cells] = grid.dx.back();
  return grid;
}

Bathymetry sample_bathymetry(const std::function<double(double)>& profile,
                             const Grid& grid, BathyQuadrature quadrature) {
  Bathymetry bathy;
  const int n = grid.cells();
  bathy.zb.resize(n);
  // 2-point Gauss-Legendre nodes on [-1/2, 1/2] in units of the cell width.
  const double node = 0.5 / std::sqrt(3.0);
  for (int i = 0; i < n; ++i) {
    if (quadrature == BathyQuadrature::midpoint) {
      bathy.zb[i] = profile(grid.xc[i]);
    } else {
      const double hw = grid.dx[i];
      bathy.zb[i] = 0.5 * (profile(grid.xc[i] - node * hw) +
                           profile(grid.xc[i] + node * hw));
    }
    if (!std::isfinite(bathy.zb[i]))
      throw ConfigError("bathymetry: non-finite value in cell " + std::to_string(i));
  }
  return bathy;
}

namespace {

// Exact integral of the piecewise-linear interpolant of (xs, zs) over [a, b],
// flat extension outside the table range.
double integrate_pwl(const std::vector<double>& xs, const std::vector<double>& zs,
                     double a, double b) {
  auto value_at = [&](double x) {
    if (x <= xs.front()) return zs.front();
    if (x >= xs.back()) return zs.back();
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const std::size_t k = static_cast<std::size_t>(it - xs.begin());
    const double t = (x - xs[k - 1]) / (xs[k] - xs[k - 1]);
    return zs[k - 1] + t * (zs[k] - zs[k - 1]);
  };
  // Breakpoints of the integrand inside [a, b].
  std::vector<double> pts{a};
  for (double x : xs)
    if (x > a && x < b) pts.push_back(x);
  pts.push_back(b);
  double total = 0.0;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    const double lo = pts[k - 1], hi = pts[k];
    total += 0.5 * (value_at(lo) + value_at(hi)) * (hi - lo);
  }
  return total;
}

}  // namespace

Bathymetry load_bathymetry_table(const std::string& path, const Grid& grid) {
  std::ifstream in(path);
  if (!in) throw ConfigError("bathymetry file not readable: " + path);

  std::vector<double> xs, zs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double x, z;
    if (!(ls >> x)) continue;  // blank/comment line
    if (!(ls >> z))
      throw ConfigError("bathymetry file " + path + ": line " +
                        std::to_string(lineno) + " needs two columns");
    xs.push_back(x);
    zs.push_back(z);
  }
  if (xs.size() < 2)
    throw ConfigError("bathymetry file " + path + ": at least two rows required");
  if (!std::is_sorted(xs.begin(), xs.end()))
    throw ConfigError("bathymetry file " + path + ": x column must increase");

  Bathymetry bathy;
  const int n = grid.cells();
  bathy.zb.resize(n);
  for (int i = 0; i < n; ++i)
    bathy.zb[i] =
        integrate_pwl(xs, zs, grid.xf[i], grid.xf[i + 1]) / grid.dx[i];
  return bathy;
}

void primitive_velocities(const CellState& state, std::vector<double>& u,
                          std::vector<double>& w) {
  const int n = state.cells();
  u.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (state.h[i] >= kDryDepth) {
      u[i] = state.qx[i] / state.h[i];
      w[i] = state.qz[i] / state.h[i];
    }
  }
}

}  // namespace swnh

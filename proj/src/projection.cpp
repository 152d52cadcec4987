#include "swnh/projection.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "swnh/common.hpp"

namespace swnh {

namespace {

// Banded LU with partial pivoting (dgtsv-style). Row swaps introduce one
// extra superdiagonal e. Arrays are size n: a[0] and c[n-1] are padding.
std::vector<double> solve_banded(std::vector<double> a, std::vector<double> d,
                                 std::vector<double> c, std::vector<double> b) {
  const int n = static_cast<int>(d.size());
  double scale = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = std::abs(d[i]);
    if (i > 0) row += std::abs(a[i]);
    if (i + 1 < n) row += std::abs(c[i]);
    scale = std::max(scale, row);
  }
  const double tol = 1e-14 * scale;
  if (scale == 0.0)
    throw NumericalError("face-pressure system is identically zero");

  std::vector<double> e(n, 0.0);
  for (int k = 0; k + 1 < n; ++k) {
    if (std::abs(d[k]) >= std::abs(a[k + 1])) {
      if (std::abs(d[k]) < tol)
        throw NumericalError("singular pivot in face-pressure solve at row " +
                             std::to_string(k) +
                             " (malformed wet/dry pattern)");
      const double m = a[k + 1] / d[k];
      d[k + 1] -= m * c[k];
      c[k + 1] -= m * e[k];
      b[k + 1] -= m * b[k];
    } else {
      const double m = d[k] / a[k + 1];  // |m| <= 1
      const double dk1 = d[k + 1], ck1 = c[k + 1], bk1 = b[k + 1];
      const double ck0 = c[k], ek0 = e[k], bk0 = b[k];
      d[k] = a[k + 1];
      c[k] = dk1;
      e[k] = ck1;
      b[k] = bk1;
      d[k + 1] = ck0 - m * dk1;
      c[k + 1] = ek0 - m * ck1;
      b[k + 1] = bk0 - m * bk1;
    }
  }
  if (std::abs(d[n - 1]) < tol)
    throw NumericalError("singular pivot in face-pressure solve at row " +
                         std::to_string(n - 1) +
                         " (malformed wet/dry pattern)");

  std::vector<double> x(n);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    if (i + 1 < n) s -= c[i] * x[i + 1];
    if (i + 2 < n) s -= e[i] * x[i + 2];
    x[i] = s / d[i];
  }
  return x;
}

}  // namespace

std::vector<double> solve_tridiag(const TriDiagSystem& sys) {
  const int n = sys.size();
  if (n == 0) return {};
  if (!sys.cyclic || (sys.corner_lower == 0.0 && sys.corner_upper == 0.0))
    return solve_banded(sys.lower, sys.diag, sys.upper, sys.rhs);

  // Sherman-Morrison rank-1 removal of the two cyclic corner couplings.
  if (n < 3)
    throw NumericalError("cyclic face-pressure system needs at least 3 faces");
  const double beta = sys.corner_lower;   // A[0][n-1]
  const double alpha = sys.corner_upper;  // A[n-1][0]
  const double gamma = -sys.diag[0];
  std::vector<double> d = sys.diag;
  d[0] -= gamma;
  d[n - 1] -= alpha * beta / gamma;
  std::vector<double> u(n, 0.0);
  u[0] = gamma;
  u[n - 1] = alpha;
  const std::vector<double> y = solve_banded(sys.lower, d, sys.upper, sys.rhs);
  const std::vector<double> z = solve_banded(sys.lower, d, sys.upper, u);
  const double vy = y[0] + beta / gamma * y[n - 1];
  const double vz = z[0] + beta / gamma * z[n - 1];
  const double denom = 1.0 + vz;
  if (std::abs(denom) < 1e-14)
    throw NumericalError("singular cyclic face-pressure system");
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = y[i] - z[i] * (vy / denom);
  return x;
}

namespace {

double wrap_face_width(const Grid& grid) {
  return 0.5 * (grid.dx.front() + grid.dx.back());
}

FacePressure pressure_impl(const CellState& state, const Bathymetry& bathy,
                           const Grid& grid, double dt, BoundaryKind bc_left,
                           BoundaryKind bc_right, const OperatorParams& params,
                           double p_in_left, double p_in_right,
                           std::vector<std::uint8_t>* active_out) {
  if (dt <= 0.0) throw ConfigError("pressure solve requires dt > 0");
  const int n = grid.cells();
  const bool periodic = bc_left == BoundaryKind::periodic;
  TriDiagSystem sys =
      assemble_laplacian(state.h, bathy.zb, grid, bc_left, bc_right, params);

  std::vector<double> u(n), w(n);
  primitive_velocities(state, u, w);
  const std::vector<double> div =
      div_sw(u, w, state.h, bathy.zb, grid, params, periodic);
  if (periodic) {
    for (int j = 0; j < n; ++j) {
      if (!sys.active[j]) continue;
      const double dxf = j == 0 ? wrap_face_width(grid) : grid.dxf[j];
      sys.rhs[j] = -div[j] * dxf / dt;
    }
  } else {
    for (int j = 1; j < n; ++j) {
      if (!sys.active[j]) continue;
      sys.rhs[j] = -div[j] * grid.dxf[j] / dt;
    }
    // A prescribed-discharge boundary carries a Dirichlet face pressure: the
    // homogeneous value 0 keeps the imposed flux untouched by the correction,
    // an inhomogeneous value injects the pressure the inflow transports.
    if (bc_left == BoundaryKind::given_flux) sys.rhs[0] = p_in_left;
    if (bc_right == BoundaryKind::given_flux) sys.rhs[n] = p_in_right;
  }

  std::vector<double> x = solve_tridiag(sys);
  // Pinned rows are identities (p = rhs, normally 0); the partial-pivot solve
  // can leave O(1e-18) dust on them when a swap mixes in a wet neighbor row.
  // Restore the exact prescribed values so a pinned face can never trip the
  // positivity clip.
  for (int j = 0; j < static_cast<int>(x.size()); ++j)
    if (!sys.active[j]) x[j] = sys.rhs[j];
  FacePressure p(n + 1);
  if (periodic) {
    for (int j = 0; j < n; ++j) p.p[j] = x[j];
    p.p[n] = x[0];
  } else {
    p.p = std::move(x);
  }
  if (active_out) *active_out = std::move(sys.active);
  return p;
}

}  // namespace

FacePressure solve_pressure(const CellState& state_half, const Bathymetry& bathy,
                            const Grid& grid, double dt, BoundaryKind bc_left,
                            BoundaryKind bc_right, const OperatorParams& params,
                            double p_in_left, double p_in_right) {
  return pressure_impl(state_half, bathy, grid, dt, bc_left, bc_right, params,
                       p_in_left, p_in_right, nullptr);
}

std::vector<int> enforce_pressure_positivity(FacePressure& p,
                                             const CellState& state_half,
                                             double g, bool periodic) {
  const int n = state_half.cells();
  std::vector<int> clipped;
  auto clip = [&](int face, double h_min) {
    if (p.p[face] == 0.0) return;
    if (0.5 * g * h_min + p.p[face] <= 0.0) {
      p.p[face] = 0.0;
      clipped.push_back(face);
    }
  };
  if (periodic) {
    clip(0, std::min(state_half.h[n - 1], state_half.h[0]));
    p.p[n] = p.p[0];
  }
  for (int j = 1; j < n; ++j)
    clip(j, std::min(state_half.h[j - 1], state_half.h[j]));
  return clipped;
}

CellState correct_velocity(const CellState& state_half, const FacePressure& p,
                           const Bathymetry& bathy, const Grid& grid, double dt,
                           const OperatorParams& params, bool periodic) {
  const int n = state_half.cells();
  std::vector<double> u(n), w(n);
  primitive_velocities(state_half, u, w);
  const SwGradient v =
      grad_sw_eps(p.p, state_half.h, bathy.zb, grid, params, periodic);
  CellState out(n);
  out.h = state_half.h;
  for (int i = 0; i < n; ++i) {
    if (state_half.h[i] < kDryDepth) {
      out.qx[i] = state_half.qx[i];
      out.qz[i] = state_half.qz[i];
      continue;
    }
    out.qx[i] = state_half.h[i] * (u[i] - dt * v.comp1[i]);
    out.qz[i] = state_half.h[i] * (w[i] - dt * v.comp2[i]);
  }
  return out;
}

double divergence_residual(const CellState& state, const Bathymetry& bathy,
                           const Grid& grid, const OperatorParams& params,
                           bool periodic) {
  const int n = state.cells();
  std::vector<double> u(n), w(n);
  primitive_velocities(state, u, w);
  const std::vector<double> div =
      div_sw(u, w, state.h, bathy.zb, grid, params, periodic);
  double r = 0.0;
  for (int j = periodic ? 0 : 1; j < n; ++j) r = std::max(r, std::abs(div[j]));
  return r;
}

CellState correction_step(const CellState& state_half, const Bathymetry& bathy,
                          const Grid& grid, double dt, BoundaryKind bc_left,
                          BoundaryKind bc_right, const OperatorParams& params,
                          FacePressure& p_out, CorrectionReport& report,
                          double p_in_left, double p_in_right) {
  const int n = grid.cells();
  const bool periodic = bc_left == BoundaryKind::periodic;
  std::vector<std::uint8_t> active;
  p_out = pressure_impl(state_half, bathy, grid, dt, bc_left, bc_right, params,
                        p_in_left, p_in_right, &active);
  const std::vector<int> clipped =
      enforce_pressure_positivity(p_out, state_half, params.g, periodic);
  report.clipped_faces = static_cast<int>(clipped.size());
  // The clip abandons the constraint on those faces, and — because no re-solve
  // is performed — the corrected velocity in the two adjacent cells no longer
  // matches the solved system, which perturbs the divergence at the faces
  // sharing a cell with a clipped face. All of those faces leave the
  // enforced-constraint set; the residual is reported over the remainder.
  const int n_active = static_cast<int>(active.size());
  auto release = [&](int f) {
    if (periodic) {
      active[((f % n) + n) % n] = 0;
    } else if (f >= 0 && f < n_active) {
      active[f] = 0;
    }
  };
  for (int f : clipped) {
    release(f - 1);
    release(f);
    release(f + 1);
  }

  CellState out =
      correct_velocity(state_half, p_out, bathy, grid, dt, params, periodic);

  std::vector<double> u(n), w(n);
  primitive_velocities(out, u, w);
  const std::vector<double> div =
      div_sw(u, w, out.h, bathy.zb, grid, params, periodic);
  double r = 0.0;
  const int first = periodic ? 0 : 1;
  for (int j = first; j < n; ++j)
    if (active[j]) r = std::max(r, std::abs(div[j]));
  double umax = 0.0;
  for (int i = 0; i < n; ++i)
    if (out.h[i] >= kDryDepth) umax = std::max(umax, std::abs(u[i]));
  report.max_div_residual = r;
  report.max_abs_u = umax;
  return out;
}

}  // namespace swnh

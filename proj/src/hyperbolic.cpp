#include "swnh/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "swnh/common.hpp"
#include "swnh/kinetic_flux.hpp"

namespace swnh {

ReconstructedPair hydrostatic_reconstruct(double h_left, double zb_left,
                                          double h_right, double zb_right) {
  ReconstructedPair out;
  out.z_star = std::max(zb_left, zb_right);
  out.h_minus = std::max(h_left + zb_left - out.z_star, 0.0);
  out.h_plus = std::max(h_right + zb_right - out.z_star, 0.0);
  return out;
}

InterfaceFluxes interface_fluxes(const FaceTrace& left, const FaceTrace& right,
                                 double g) {
  const ReconstructedPair rec =
      hydrostatic_reconstruct(left.h, left.zb, right.h, right.zb);
  const HalfMoments up = positive_half_moments(rec.h_minus, left.u, g);
  const HalfMoments down = negative_half_moments(rec.h_plus, right.u, g);
  InterfaceFluxes out;
  out.f_h = up.m1 + down.m1;
  const double f_qx = up.m2 + down.m2;
  out.f_qx_minus = f_qx + 0.5 * g * (left.h * left.h - rec.h_minus * rec.h_minus);
  out.f_qx_plus = f_qx + 0.5 * g * (right.h * right.h - rec.h_plus * rec.h_plus);
  out.f_qz = out.f_h >= 0.0 ? out.f_h * left.w : out.f_h * right.w;
  return out;
}

double stable_dt(const CellState& state, const Grid& grid, double cfl, double g,
                 double max_dt) {
  const double min_dx = *std::min_element(grid.dx.begin(), grid.dx.end());
  double max_speed = 0.0;
  for (int i = 0; i < state.cells(); ++i) {
    const double h = state.h[i];
    if (h < kDryDepth) continue;
    const double speed = std::abs(state.qx[i] / h) + std::sqrt(2.0 * g * h);
    max_speed = std::max(max_speed, speed);
  }
  if (max_speed <= 0.0) return max_dt;
  return std::min(cfl * min_dx / max_speed, max_dt);
}

GhostedPrimitives fill_ghosts(const CellState& state, const Bathymetry& bathy,
                              const Grid& /*grid*/, const BoundaryCondition& bc_left,
                              const BoundaryCondition& bc_right, double t,
                              double g) {
  const int n = state.cells();
  GhostedPrimitives gp;
  gp.h.assign(n + 4, 0.0);
  gp.u.assign(n + 4, 0.0);
  gp.w.assign(n + 4, 0.0);
  gp.zb.assign(n + 4, 0.0);

  std::vector<double> u(n), w(n);
  primitive_velocities(state, u, w);
  for (int i = 0; i < n; ++i) {
    gp.h[i + 2] = state.h[i];
    gp.u[i + 2] = u[i];
    gp.w[i + 2] = w[i];
    gp.zb[i + 2] = bathy.zb[i];
  }

  auto wrap = [n](int i) { return ((i % n) + n) % n; };
  auto fill_side = [&](const BoundaryCondition& bc, bool left) {
    // Ghost slots (nearest first) and the interior cells they mirror.
    const int g1 = left ? 1 : n + 2;
    const int g2 = left ? 0 : n + 3;
    const int c1 = left ? 0 : n - 1;
    const int c2 = left ? std::min(1, n - 1) : std::max(n - 2, 0);
    switch (bc.kind) {
      case BoundaryKind::wall:
        gp.h[g1] = state.h[c1];
        gp.h[g2] = state.h[c2];
        gp.u[g1] = -u[c1];
        gp.u[g2] = -u[c2];
        gp.w[g1] = w[c1];
        gp.w[g2] = w[c2];
        gp.zb[g1] = bathy.zb[c1];
        gp.zb[g2] = bathy.zb[c2];
        break;
      case BoundaryKind::periodic: {
        const int p1 = left ? wrap(-1) : wrap(n);
        const int p2 = left ? wrap(-2) : wrap(n + 1);
        gp.h[g1] = state.h[p1];
        gp.h[g2] = state.h[p2];
        gp.u[g1] = u[p1];
        gp.u[g2] = u[p2];
        gp.w[g1] = w[p1];
        gp.w[g2] = w[p2];
        gp.zb[g1] = bathy.zb[p1];
        gp.zb[g2] = bathy.zb[p2];
        break;
      }
      case BoundaryKind::given_flux: {
        // Subcritical in-/outflow with prescribed discharge: the ghost depth
        // is not free — it must preserve the Riemann invariant that leaves
        // the domain (u - 2 sqrt(gh) through the left boundary, u + 2 sqrt(gh)
        // through the right), otherwise the mismatch radiates back inside.
        // Solve q / h - s 2 sqrt(gh) = R for h by Newton (f is monotone in h).
        const double q = bc.eval(t);
        double h_ghost = state.h[c1];
        double u_ghost = 0.0;
        if (h_ghost >= kDryDepth) {
          const double s = left ? 1.0 : -1.0;
          const double R = u[c1] - s * 2.0 * std::sqrt(g * state.h[c1]);
          for (int it = 0; it < 30; ++it) {
            const double f = q / h_ghost - s * 2.0 * std::sqrt(g * h_ghost) - R;
            const double df =
                -q / (h_ghost * h_ghost) - s * std::sqrt(g / h_ghost);
            const double step = f / df;
            h_ghost -= step;
            if (!(h_ghost > kDryDepth)) {
              h_ghost = state.h[c1];  // fell out of range: keep zero-gradient
              break;
            }
            if (std::abs(step) < 1e-14 * h_ghost) break;
          }
          u_ghost = q / h_ghost;
        }
        gp.h[g1] = gp.h[g2] = h_ghost;
        gp.u[g1] = gp.u[g2] = u_ghost;
        gp.w[g1] = gp.w[g2] = bc.w_series ? bc.w_series(t) : w[c1];
        gp.zb[g1] = gp.zb[g2] = bathy.zb[c1];
        break;
      }
      case BoundaryKind::given_depth: {
        const double h_ghost = bc.eval(t);
        const double u_ghost = h_ghost >= kDryDepth ? state.qx[c1] / h_ghost : 0.0;
        gp.h[g1] = gp.h[g2] = h_ghost;
        gp.u[g1] = gp.u[g2] = u_ghost;
        gp.w[g1] = gp.w[g2] = w[c1];
        gp.zb[g1] = gp.zb[g2] = bathy.zb[c1];
        break;
      }
    }
  };
  fill_side(bc_left, true);
  fill_side(bc_right, false);
  return gp;
}

namespace {

double minmod(double a, double b) {
  if (a > 0.0 && b > 0.0) return std::min(a, b);
  if (a < 0.0 && b < 0.0) return std::max(a, b);
  return 0.0;
}

// Edge traces of one cell given its value, limited slope, and width.
struct CellEdges {
  FaceTrace left, right;
};

CellEdges limited_edges(double h, double u, double w, double zb, double sh,
                        double su, double sw_, double seta, double dx) {
  CellEdges e;
  const double eta = h + zb;
  auto build = [&](double sign) {
    FaceTrace tr;
    tr.h = std::max(h + sign * 0.5 * dx * sh, 0.0);
    tr.u = u + sign * 0.5 * dx * su;
    tr.w = w + sign * 0.5 * dx * sw_;
    tr.zb = (eta + sign * 0.5 * dx * seta) - tr.h;
    return tr;
  };
  e.left = build(-1.0);
  e.right = build(1.0);
  return e;
}

// Ghost widths for the two extension cells on each side, matching the ghost
// value conventions (mirror for walls, wrap for periodic, flat otherwise).
std::vector<double> ghost_widths(const Grid& grid, BoundaryKind left,
                                 BoundaryKind right) {
  const int n = grid.cells();
  std::vector<double> dxg(n + 4);
  for (int i = 0; i < n; ++i) dxg[i + 2] = grid.dx[i];
  auto wrap = [n](int i) { return ((i % n) + n) % n; };
  if (left == BoundaryKind::wall) {
    dxg[1] = grid.dx[0];
    dxg[0] = grid.dx[std::min(1, n - 1)];
  } else if (left == BoundaryKind::periodic) {
    dxg[1] = grid.dx[wrap(-1)];
    dxg[0] = grid.dx[wrap(-2)];
  } else {
    dxg[1] = dxg[0] = grid.dx[0];
  }
  if (right == BoundaryKind::wall) {
    dxg[n + 2] = grid.dx[n - 1];
    dxg[n + 3] = grid.dx[std::max(n - 2, 0)];
  } else if (right == BoundaryKind::periodic) {
    dxg[n + 2] = grid.dx[wrap(n)];
    dxg[n + 3] = grid.dx[wrap(n + 1)];
  } else {
    dxg[n + 2] = dxg[n + 3] = grid.dx[n - 1];
  }
  return dxg;
}

// Second-order traces on the ghost-extended arrays; faces 0..I all see
// properly limited neighbor states.
FaceTraces ghosted_traces(const GhostedPrimitives& gp, const Grid& grid,
                          BoundaryKind bcl, BoundaryKind bcr) {
  const int n = grid.cells();
  const std::vector<double> dxg = ghost_widths(grid, bcl, bcr);
  std::vector<double> xg(n + 4);
  xg[2] = grid.xc[0];
  for (int k = 3; k < n + 4; ++k)
    xg[k] = xg[k - 1] + 0.5 * (dxg[k - 1] + dxg[k]);
  for (int k = 1; k >= 0; --k) xg[k] = xg[k + 1] - 0.5 * (dxg[k + 1] + dxg[k]);

  std::vector<CellEdges> edges(n + 2);  // extended cells -1 .. I
  for (int k = 1; k <= n + 2; ++k) {
    auto slope = [&](auto&& f) {
      const double sl = (f(k) - f(k - 1)) / (xg[k] - xg[k - 1]);
      const double sr = (f(k + 1) - f(k)) / (xg[k + 1] - xg[k]);
      return minmod(sl, sr);
    };
    const double sh = slope([&](int k2) { return gp.h[k2]; });
    const double su = slope([&](int k2) { return gp.u[k2]; });
    const double sw_ = slope([&](int k2) { return gp.w[k2]; });
    const double seta = slope([&](int k2) { return gp.h[k2] + gp.zb[k2]; });
    edges[k - 1] =
        limited_edges(gp.h[k], gp.u[k], gp.w[k], gp.zb[k], sh, su, sw_, seta,
                      dxg[k]);
  }

  FaceTraces tr;
  tr.minus.resize(n + 1);
  tr.plus.resize(n + 1);
  for (int j = 0; j <= n; ++j) {
    tr.minus[j] = edges[j].right;    // extended cell j-1
    tr.plus[j] = edges[j + 1].left;  // extended cell j
  }
  return tr;
}

FaceTraces first_order_traces(const GhostedPrimitives& gp, int n) {
  FaceTraces tr;
  tr.minus.resize(n + 1);
  tr.plus.resize(n + 1);
  for (int j = 0; j <= n; ++j) {
    tr.minus[j] = FaceTrace{gp.h[j + 1], gp.u[j + 1], gp.w[j + 1], gp.zb[j + 1]};
    tr.plus[j] = FaceTrace{gp.h[j + 2], gp.u[j + 2], gp.w[j + 2], gp.zb[j + 2]};
  }
  return tr;
}

}  // namespace

FaceTraces muscl_reconstruct(const CellState& state, const Bathymetry& bathy,
                             const Grid& grid) {
  const int n = state.cells();
  std::vector<double> u(n), w(n);
  primitive_velocities(state, u, w);

  std::vector<CellEdges> edges(n);
  for (int i = 0; i < n; ++i) {
    double sh = 0, su = 0, sw_ = 0, seta = 0;
    if (i > 0 && i < n - 1) {
      auto slope = [&](auto&& f) {
        const double sl = (f(i) - f(i - 1)) / (grid.xc[i] - grid.xc[i - 1]);
        const double sr = (f(i + 1) - f(i)) / (grid.xc[i + 1] - grid.xc[i]);
        return minmod(sl, sr);
      };
      sh = slope([&](int k) { return state.h[k]; });
      su = slope([&](int k) { return u[k]; });
      sw_ = slope([&](int k) { return w[k]; });
      seta = slope([&](int k) { return state.h[k] + bathy.zb[k]; });
    }
    edges[i] = limited_edges(state.h[i], u[i], w[i], bathy.zb[i], sh, su, sw_,
                             seta, grid.dx[i]);
  }

  FaceTraces tr;
  tr.minus.resize(n + 1);
  tr.plus.resize(n + 1);
  for (int j = 1; j <= n - 1; ++j) {
    tr.minus[j] = edges[j - 1].right;
    tr.plus[j] = edges[j].left;
  }
  tr.plus[0] = tr.minus[0] = edges[0].left;
  tr.minus[n] = tr.plus[n] = edges[n - 1].right;
  return tr;
}

CellState prediction_step(const CellState& state, const Bathymetry& bathy,
                          const Grid& grid, const BoundaryCondition& bc_left,
                          const BoundaryCondition& bc_right, double t, double dt,
                          int order, double g, const SourceFn& source) {
  const int n = state.cells();
  const GhostedPrimitives gp =
      fill_ghosts(state, bathy, grid, bc_left, bc_right, t, g);
  const FaceTraces tr =
      order == 2 ? ghosted_traces(gp, grid, bc_left.kind, bc_right.kind)
                 : first_order_traces(gp, n);

  std::vector<InterfaceFluxes> flux(n + 1);
  for (int j = 0; j <= n; ++j) flux[j] = interface_fluxes(tr.minus[j], tr.plus[j], g);

  CellState out(n);
  for (int i = 0; i < n; ++i) {
    const double inv_dx = 1.0 / grid.dx[i];
    const FaceTrace& el = tr.plus[i];      // this cell's left-edge trace
    const FaceTrace& er = tr.minus[i + 1];  // this cell's right-edge trace
    const double centered_qx =
        -g * 0.5 * (el.h + er.h) * (er.zb - el.zb) * inv_dx;

    double h_new = state.h[i] - dt * inv_dx * (flux[i + 1].f_h - flux[i].f_h);
    double qx_new = state.qx[i] -
                    dt * inv_dx * (flux[i + 1].f_qx_minus - flux[i].f_qx_plus) +
                    dt * centered_qx;
    double qz_new = state.qz[i] - dt * inv_dx * (flux[i + 1].f_qz - flux[i].f_qz);
    if (source) qz_new += dt * state.h[i] * source(grid.xc[i], t);

    if (h_new < -1e-12) {
      char what[160];
      std::snprintf(what, sizeof(what),
                    "prediction step produced negative depth %.3e at cell %d "
                    "(x = %g, t = %g); reduce the CFL number",
                    h_new, i, grid.xc[i], t);
      throw NumericalError(what);
    }
    h_new = std::max(h_new, 0.0);
    if (h_new < kDryDepth) {
      qx_new = 0.0;
      qz_new = 0.0;
    }
    out.h[i] = h_new;
    out.qx[i] = qx_new;
    out.qz[i] = qz_new;
  }
  return out;
}

}  // namespace swnh

#include "swnh/simulation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <limits>
#include <utility>

namespace swnh {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

// Residual of the divergence constraint over the faces that can carry it
// (both neighbor columns wet). Used for the initial diagnostics row; steps
// report the post-correction residual from the projection itself.
double active_residual(const CellState& state, const Bathymetry& bathy,
                       const Grid& grid, const OperatorParams& params,
                       bool periodic) {
  const int n = state.cells();
  std::vector<double> u(n), w(n);
  primitive_velocities(state, u, w);
  const std::vector<double> div =
      div_sw(u, w, state.h, bathy.zb, grid, params, periodic);
  double r = 0.0;
  for (int j = 1; j < n; ++j)
    if (std::min(state.h[j - 1], state.h[j]) >= kDryDepth)
      r = std::max(r, std::abs(div[j]));
  if (periodic && std::min(state.h[n - 1], state.h[0]) >= kDryDepth)
    r = std::max(r, std::abs(div[0]));
  return r;
}

}  // namespace

Simulation::Simulation(const RunConfig& config)
    : config_(config),
      grid_((config.validate(),
             build_uniform_grid(config.x_left, config.x_right, config.cells))),
      bathy_{},
      state_(config.cells),
      pressure_(config.cells + 1) {
  const int n = config_.cells;
  const double length = config_.x_right - config_.x_left;
  if (std::isnan(config_.bump_center))
    config_.bump_center = 0.5 * (config_.x_left + config_.x_right);
  if (std::isnan(config_.bump_halfwidth)) config_.bump_halfwidth = length / 8.0;
  if (std::isnan(config_.bowl_F0))
    config_.bowl_F0 = 1.0 / std::sqrt(config_.g * config_.bowl_b2);

  op_params_ = OperatorParams{config_.alpha, config_.epsilon, config_.g};

  auto flat_or_file_bathymetry = [&]() {
    if (!config_.bathymetry_file.empty())
      bathy_ = load_bathymetry_table(config_.bathymetry_file, grid_);
    else
      bathy_.zb.assign(n, 0.0);
  };

  switch (config_.scenario) {
    case Scenario::lake_at_rest: {
      if (!config_.bathymetry_file.empty()) {
        bathy_ = load_bathymetry_table(config_.bathymetry_file, grid_);
      } else {
        const double c = config_.bump_center;
        const double hw = config_.bump_halfwidth;
        const double amp = config_.bump_height;
        bathy_ = sample_bathymetry(
            [=](double x) {
              const double r = (x - c) / hw;
              return std::max(0.0, amp * (1.0 - r * r));
            },
            grid_, config_.bathy_quadrature);
      }
      for (int i = 0; i < n; ++i)
        state_.h[i] = std::max(0.0, config_.surface_level - bathy_.zb[i]);
      break;
    }
    case Scenario::dam_break: {
      flat_or_file_bathymetry();
      for (int i = 0; i < n; ++i)
        state_.h[i] = grid_.xc[i] < config_.dam_x0 ? config_.dam_hl
                                                   : config_.dam_hr;
      break;
    }
    case Scenario::parabolic_bowl: {
      const BowlParams bp{config_.bowl_h0, config_.bowl_b1, config_.bowl_b2,
                          config_.bowl_f0, config_.bowl_F0, config_.g};
      bathy_ = sample_bathymetry(
          [&](double x) { return bowl_bathymetry(bp, x); }, grid_,
          config_.bathy_quadrature);
      bowl_ = std::make_shared<BowlSolution>(bp, config_.t_final);
      for (int i = 0; i < n; ++i) {
        const BowlFields f = bowl_fields(bp, bp.f0, bp.F0, grid_.xc[i]);
        state_.h[i] = f.h;
        state_.qx[i] = f.h * f.u;
        state_.qz[i] = f.h * f.w;
      }
      // Vertical-momentum forcing H*s with s = b2 x f'(t); f'(t) is cached
      // per time level since the prediction queries every cell at the same t.
      struct Cache {
        double t = std::numeric_limits<double>::quiet_NaN();
        double coeff = 0.0;
      };
      auto cache = std::make_shared<Cache>();
      const double b2 = bp.b2, g = bp.g;
      auto bowl = bowl_;
      source_ = [bowl, cache, b2, g](double x, double t) {
        if (t != cache->t) {
          const BowlSolution::Phase ph = bowl->phase(t);
          cache->coeff = b2 * (-b2 * (g + b2 * ph.f * ph.f) * ph.F);
          cache->t = t;
        }
        return cache->coeff * x;
      };
      break;
    }
    case Scenario::soliton:
    case Scenario::soliton_entering: {
      SolitonParams sp{config_.soliton_h0, config_.soliton_l, config_.soliton_d,
                       0.0, config_.g};
      const SolitonSolution probe(sp);
      if (std::isnan(config_.soliton_x0))
        config_.soliton_x0 = config_.scenario == Scenario::soliton_entering
                                 ? config_.x_left - 4.0 * probe.celerity()
                                 : 0.0;
      sp.x0 = config_.soliton_x0;
      soliton_ = std::make_shared<SolitonSolution>(sp);
      bathy_.zb.assign(n, 0.0);
      for (int i = 0; i < n; ++i) {
        const double x = grid_.xc[i];
        state_.h[i] = soliton_->h(x, 0.0);
        state_.qx[i] = state_.h[i] * soliton_->u(x, 0.0);
        state_.qz[i] = state_.h[i] * soliton_->w(x, 0.0);
      }
      break;
    }
  }

  bcond_left_ =
      BoundaryCondition{.kind = config_.bc_left, .value = config_.bc_left_value};
  bcond_right_ = BoundaryCondition{.kind = config_.bc_right,
                                   .value = config_.bc_right_value};
  if (config_.scenario == Scenario::soliton_entering) {
    // The wave enters through the left boundary: impose the analytic
    // discharge there as a time series, along with the vertical velocity and
    // face pressure the inflow transports. Without the former the wave builds
    // up inside with w = 0 near the inlet; without the latter the homogeneous
    // inlet pressure leaves a mesh-independent shape defect behind while the
    // wave crosses the boundary.
    config_.bc_left = BoundaryKind::given_flux;
    auto sol = soliton_;
    const double xb = config_.x_left;
    bcond_left_ = BoundaryCondition{
        BoundaryKind::given_flux, 0.0,
        [sol, xb](double t) { return sol->discharge(xb, t); },
        [sol, xb](double t) { return sol->w(xb, t); },
        [sol, xb](double t) { return sol->p_nh(xb, t); }};
  }
}

void Simulation::phi_step(double t, double dt, CellState& state,
                          CorrectionReport& report) {
  state = prediction_step(state, bathy_, grid_, bcond_left_, bcond_right_, t,
                          dt, config_.order, config_.g, source_);
  // The corrected state lives at t + dt, so boundary face pressures are
  // sampled there.
  const double pl =
      bcond_left_.p_series ? bcond_left_.p_series(t + dt) : 0.0;
  const double pr =
      bcond_right_.p_series ? bcond_right_.p_series(t + dt) : 0.0;
  state = correction_step(state, bathy_, grid_, dt, bcond_left_.kind,
                          bcond_right_.kind, op_params_, pressure_, report, pl,
                          pr);
}

void Simulation::advance(double dt) {
  CorrectionReport agg;
  if (config_.order == 1) {
    phi_step(t_, dt, state_, agg);
  } else {
    CellState x2 = state_;
    CorrectionReport r1, r2;
    phi_step(t_, dt, x2, r1);
    phi_step(t_ + dt, dt, x2, r2);
    for (int i = 0; i < state_.cells(); ++i) {
      state_.h[i] = 0.5 * (state_.h[i] + x2.h[i]);
      state_.qx[i] = 0.5 * (state_.qx[i] + x2.qx[i]);
      state_.qz[i] = 0.5 * (state_.qz[i] + x2.qz[i]);
    }
    agg.max_div_residual = std::max(r1.max_div_residual, r2.max_div_residual);
    agg.clipped_faces = r1.clipped_faces + r2.clipped_faces;
    agg.max_abs_u = std::max(r1.max_abs_u, r2.max_abs_u);
  }
  t_ += dt;
  ++steps_;
  last_report_ = agg;
}

double Simulation::step() {
  const double dt =
      stable_dt(state_, grid_, config_.cfl, config_.g, config_.max_dt);
  if (!std::isfinite(dt) || !(dt > 0.0))
    throw NumericalError("no finite stable time step at t = " +
                         std::to_string(t_) +
                         " (all-dry state needs a finite max_dt)");
  advance(dt);
  return dt;
}

StepDiagnostics Simulation::collect_diagnostics() const {
  StepDiagnostics row;
  row.t = t_;
  row.mass = total_mass(state_, grid_);
  const EnergyBreakdown e = total_energy(state_, bathy_, grid_, config_.g);
  row.eta_total = e.eta_total;
  row.eta_hyd = e.eta_hyd;
  row.max_div_residual = last_report_.max_div_residual;
  row.clipped_faces = last_report_.clipped_faces;
  row.max_abs_u = last_report_.max_abs_u;

  const GhostedPrimitives gp =
      fill_ghosts(state_, bathy_, grid_, bcond_left_, bcond_right_, t_, config_.g);
  const int n = grid_.cells();
  auto flux_at = [&](int gl, int gr, double p_face) {
    const ReconstructedPair rec =
        hydrostatic_reconstruct(gp.h[gl], gp.zb[gl], gp.h[gr], gp.zb[gr]);
    return interface_energy_flux(
        rec.h_minus, gp.u[gl], gp.w[gl], gp.h[gl] * gp.u[gl], rec.h_plus,
        gp.u[gr], gp.w[gr], gp.h[gr] * gp.u[gr], rec.z_star, p_face, config_.g);
  };
  row.boundary_energy_flux_left = flux_at(1, 2, pressure_.p[0]);
  row.boundary_energy_flux_right = flux_at(n + 1, n + 2, pressure_.p[n]);
  return row;
}

RunResult Simulation::run(const std::string& out_dir_arg) {
  namespace fs = std::filesystem;
  const std::string out_dir =
      out_dir_arg.empty() ? config_.out_dir : out_dir_arg;
  const bool writing = !out_dir.empty();
  if (writing) fs::create_directories(out_dir);

  int snapshot_index = 0;
  double last_snapshot_t = -std::numeric_limits<double>::infinity();
  auto write_snapshot = [&]() {
    char name[64];
    std::snprintf(name, sizeof(name), "snapshot_%04d_t%.6f.csv",
                  snapshot_index, t_);
    write_snapshot_csv((fs::path(out_dir) / name).string(), grid_, bathy_,
                       state_, pressure_);
    ++snapshot_index;
    last_snapshot_t = t_;
  };

  RunResult result;
  result.final_state = state_;
  result.final_pressure = pressure_;
  const bool periodic = bcond_left_.kind == BoundaryKind::periodic;
  const auto t0 = std::chrono::steady_clock::now();

  double min_h = *std::min_element(state_.h.begin(), state_.h.end());
  {
    StepDiagnostics row0 = collect_diagnostics();
    row0.max_div_residual =
        active_residual(state_, bathy_, grid_, op_params_, periodic);
    row0.clipped_faces = 0;
    result.diagnostics.push_back(row0);
  }
  if (writing) write_snapshot();

  const double t_final = config_.t_final;
  const double interval = config_.snapshot_interval;
  const double t_eps = 1e-12 * std::max(1.0, t_final);
  double next_mark =
      interval > 0.0 ? interval : std::numeric_limits<double>::infinity();
  double worst_ratio = 0.0;
  long total_clips = 0;

  while (t_ < t_final - t_eps) {
    double dt = stable_dt(state_, grid_, config_.cfl, config_.g, config_.max_dt);
    if (!std::isfinite(dt) || !(dt > 0.0))
      throw NumericalError("no finite stable time step at t = " +
                           std::to_string(t_) +
                           " (all-dry state needs a finite max_dt)");
    dt = std::min(dt, t_final - t_);
    bool at_mark = false;
    if (next_mark <= t_final + t_eps && t_ + dt >= next_mark - t_eps) {
      dt = next_mark - t_;
      at_mark = true;
    }
    if (dt < t_eps)
      throw NumericalError("time step collapsed to " + std::to_string(dt) +
                           " at t = " + std::to_string(t_) + " after " +
                           std::to_string(steps_) + " steps");
    advance(dt);
    result.diagnostics.push_back(collect_diagnostics());
    min_h = std::min(min_h, *std::min_element(state_.h.begin(), state_.h.end()));
    worst_ratio = std::max(worst_ratio, last_report_.max_div_residual /
                                            std::max(1.0, last_report_.max_abs_u));
    total_clips += last_report_.clipped_faces;
    if (at_mark) {
      if (writing) write_snapshot();
      next_mark += interval;
    }
    if (steps_ > 50000000)
      throw NumericalError("exceeded 50M time steps before t_final");
  }

  if (writing) {
    if (t_ > last_snapshot_t + t_eps || snapshot_index == 0) write_snapshot();
    write_diagnostics_csv((fs::path(out_dir) / "diagnostics.csv").string(),
                          result.diagnostics);
  }

  result.final_state = state_;
  result.final_pressure = pressure_;
  result.t_end = t_;
  result.steps = steps_;
  result.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  result.min_h_seen = min_h;
  result.worst_div_ratio = worst_ratio;
  result.total_clipped_faces = static_cast<int>(total_clips);
  return result;
}

std::optional<std::vector<double>> Simulation::reference_depth(double t) const {
  const int n = grid_.cells();
  std::vector<double> ref(n);
  switch (config_.scenario) {
    case Scenario::lake_at_rest:
      for (int i = 0; i < n; ++i)
        ref[i] = std::max(0.0, config_.surface_level - bathy_.zb[i]);
      return ref;
    case Scenario::parabolic_bowl: {
      const BowlSolution::Phase ph = bowl_->phase(t);
      for (int i = 0; i < n; ++i)
        ref[i] = bowl_fields(bowl_->params(), ph.f, ph.F, grid_.xc[i]).h;
      return ref;
    }
    case Scenario::soliton:
    case Scenario::soliton_entering:
      for (int i = 0; i < n; ++i) ref[i] = soliton_->h(grid_.xc[i], t);
      return ref;
    case Scenario::dam_break:
      break;
  }
  return std::nullopt;
}

int Simulation::cell_containing(double x) const {
  const auto& xf = grid_.xf;
  if (x <= xf.front()) return 0;
  if (x >= xf.back()) return grid_.cells() - 1;
  const auto it = std::upper_bound(xf.begin(), xf.end(), x);
  const int idx = static_cast<int>(std::distance(xf.begin(), it)) - 1;
  return std::clamp(idx, 0, grid_.cells() - 1);
}

RunResult run_simulation(const RunConfig& config, const std::string& out_dir) {
  Simulation sim(config);
  return sim.run(out_dir);
}

ConvergenceResult run_convergence_study(const RunConfig& base,
                                        const std::vector<int>& meshes,
                                        const std::string& out_dir) {
  if (meshes.size() < 2)
    throw ConfigError("a convergence study needs at least 2 meshes");
  if (base.scenario == Scenario::dam_break)
    throw ConfigError(
        "dam_break has no analytic reference for a convergence study");

  std::vector<std::future<ConvergenceRow>> futures;
  futures.reserve(meshes.size());
  for (int cells : meshes) {
    futures.push_back(std::async(std::launch::async, [base, cells]() {
      ConvergenceRow row;
      row.cells = cells;
      row.h = cells > 0 ? (base.x_right - base.x_left) / cells : 0.0;
      try {
        RunConfig cfg = base;
        cfg.cells = cells;
        cfg.out_dir.clear();
        Simulation sim(cfg);
        const RunResult res = sim.run();
        const auto ref = sim.reference_depth(res.t_end);
        if (!ref)
          throw ConfigError("scenario has no analytic reference solution");
        row.l1_h = l1_error(res.final_state.h, *ref, sim.grid().dx);
      } catch (const std::exception& e) {
        row.failed = true;
        row.error = e.what();
      }
      return row;
    }));
  }

  ConvergenceResult out;
  for (auto& f : futures) out.rows.push_back(f.get());

  std::vector<double> hs, errs;
  for (const ConvergenceRow& r : out.rows)
    if (!r.failed) {
      hs.push_back(r.h);
      errs.push_back(r.l1_h);
    }
  out.lsq_order = std::numeric_limits<double>::quiet_NaN();
  if (hs.size() >= 2) {
    try {
      out.lsq_order = convergence_order(hs, errs);
    } catch (const ConfigError&) {
      // undefined fit (identical meshes or non-positive errors): leave NaN
    }
  }
  out.pairwise = pairwise_orders(hs, errs);

  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    write_convergence_csv(
        (std::filesystem::path(out_dir) / "convergence.csv").string(), out);
  }
  return out;
}

void write_snapshot_csv(const std::string& path, const Grid& grid,
                        const Bathymetry& bathy, const CellState& state,
                        const FacePressure& p) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write snapshot file: " + path);
  out << "x,H,u,w,zb,p_left_face,p_right_face\n";
  const int n = state.cells();
  std::vector<double> u(n), w(n);
  primitive_velocities(state, u, w);
  for (int i = 0; i < n; ++i) {
    out << fmt(grid.xc[i]) << ',' << fmt(state.h[i]) << ',' << fmt(u[i]) << ','
        << fmt(w[i]) << ',' << fmt(bathy.zb[i]) << ',' << fmt(p.p[i]) << ','
        << fmt(p.p[i + 1]) << '\n';
  }
}

void write_diagnostics_csv(const std::string& path,
                           const std::vector<StepDiagnostics>& rows) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write diagnostics file: " + path);
  out << "t,mass,eta_total,eta_hyd,max_div_residual,clipped_faces\n";
  for (const StepDiagnostics& r : rows) {
    out << fmt(r.t) << ',' << fmt(r.mass) << ',' << fmt(r.eta_total) << ','
        << fmt(r.eta_hyd) << ',' << fmt(r.max_div_residual) << ','
        << r.clipped_faces << '\n';
  }
}

void write_convergence_csv(const std::string& path,
                           const ConvergenceResult& r) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write convergence file: " + path);
  out << "cells,h,l1_h,pairwise_order,status\n";
  int ok_seen = 0;
  for (const ConvergenceRow& row : r.rows) {
    out << row.cells << ',' << fmt(row.h) << ',';
    if (row.failed) {
      std::string msg = row.error;
      for (auto pos = msg.find('"'); pos != std::string::npos;
           pos = msg.find('"', pos + 2))
        msg.insert(pos, 1, '"');
      out << ",,\"failed: " << msg << "\"\n";
      continue;
    }
    out << fmt(row.l1_h) << ',';
    if (ok_seen >= 1 && ok_seen - 1 < static_cast<int>(r.pairwise.size()))
      out << fmt(r.pairwise[ok_seen - 1]);
    out << ",ok\n";
    ++ok_seen;
  }
  out << "# least_squares_order = " << fmt(r.lsq_order) << '\n';
}

void write_reference_csv(const std::string& path, const RunConfig& config_in,
                         double t) {
  RunConfig config = config_in;
  config.out_dir.clear();
  config.t_final = std::max(config.t_final, t);
  config.validate();
  if (config.scenario == Scenario::dam_break)
    throw ConfigError("dam_break has no analytic reference solution");
  Simulation sim(config);

  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write reference file: " + path);
  out << "x,H,u,w,zb,p_nh\n";
  const Grid& grid = sim.grid();
  const Bathymetry& bathy = sim.bathymetry();
  for (int i = 0; i < grid.cells(); ++i) {
    const double x = grid.xc[i];
    double h = 0, u = 0, w = 0, p = 0;
    switch (config.scenario) {
      case Scenario::lake_at_rest:
        h = std::max(0.0, config.surface_level - bathy.zb[i]);
        break;
      case Scenario::parabolic_bowl: {
        const BowlFields f = sim.bowl_reference()->fields(x, t);
        h = f.h;
        u = f.u;
        w = f.w;
        p = f.p_nh;
        break;
      }
      case Scenario::soliton:
      case Scenario::soliton_entering: {
        const SolitonSolution* sol = sim.soliton_reference();
        h = sol->h(x, t);
        u = sol->u(x, t);
        w = sol->w(x, t);
        p = sol->p_nh(x, t);
        break;
      }
      case Scenario::dam_break:
        break;
    }
    out << fmt(x) << ',' << fmt(h) << ',' << fmt(u) << ',' << fmt(w) << ','
        << fmt(bathy.zb[i]) << ',' << fmt(p) << '\n';
  }
}

}  // namespace swnh

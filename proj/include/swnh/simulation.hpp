#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "swnh/analytic.hpp"
#include "swnh/config.hpp"
#include "swnh/diagnostics.hpp"
#include "swnh/hyperbolic.hpp"
#include "swnh/projection.hpp"

namespace swnh {

/// Per-step diagnostics row (written verbatim to diagnostics.csv).
struct StepDiagnostics {
  double t = 0;
  double mass = 0;
  double eta_total = 0;
  double eta_hyd = 0;
  double max_div_residual = 0;
  int clipped_faces = 0;
  // in-memory extras for energy-budget audits (not part of the CSV):
  double boundary_energy_flux_left = 0;
  double boundary_energy_flux_right = 0;
  double max_abs_u = 0;
};

struct RunResult {
  CellState final_state;
  FacePressure final_pressure;
  double t_end = 0;
  int steps = 0;
  double wall_clock_seconds = 0;
  std::vector<StepDiagnostics> diagnostics;  // row 0 is the initial state
  // run-wide extremes:
  double min_h_seen = 0;
  double worst_div_ratio = 0;  // max over steps of residual / max(1, max|u|)
  int total_clipped_faces = 0;
};

/// One simulation instance: grid, bathymetry, state, boundary conditions, and
/// the predict -> solve -> clip -> correct time loop.
class Simulation {
 public:
  explicit Simulation(const RunConfig& config);

  /// Advance by one full time step (Heun pair at order 2); returns dt taken.
  double step();

  /// Run to t_final, recording per-step diagnostics; when out_dir is nonempty
  /// writes snapshots + diagnostics.csv there.
  RunResult run(const std::string& out_dir = "");

  const Grid& grid() const { return grid_; }
  const Bathymetry& bathymetry() const { return bathy_; }
  const CellState& state() const { return state_; }
  CellState& mutable_state() { return state_; }
  const FacePressure& pressure() const { return pressure_; }
  double time() const { return t_; }
  const RunConfig& config() const { return config_; }

  /// Analytic reference for the configured scenario at time t sampled on the
  /// current grid (empty when the scenario has no reference).
  std::optional<std::vector<double>> reference_depth(double t) const;

  /// Nearest-cell sample for the error-at-x0 series.
  int cell_containing(double x) const;

  const BowlSolution* bowl_reference() const { return bowl_.get(); }
  const SolitonSolution* soliton_reference() const { return soliton_.get(); }

  /// Aggregated correction report of the most recent step. At order 2 the
  /// residual is the max over the two stage projections (each stage state is
  /// divergence-free; their average deviates at O(dt^2) by construction, so
  /// the enforced-constraint residual is the per-stage one).
  const CorrectionReport& last_report() const { return last_report_; }

 private:
  void advance(double dt);  // one full step (both Heun stages at order 2)
  void phi_step(double t, double dt, CellState& state, CorrectionReport& report);
  StepDiagnostics collect_diagnostics() const;

  RunConfig config_;
  Grid grid_;
  Bathymetry bathy_;
  CellState state_;
  FacePressure pressure_;
  BoundaryCondition bcond_left_, bcond_right_;
  OperatorParams op_params_;
  double t_ = 0;
  int steps_ = 0;
  CorrectionReport last_report_;
  std::shared_ptr<BowlSolution> bowl_;
  std::shared_ptr<SolitonSolution> soliton_;
  SourceFn source_;
};

RunResult run_simulation(const RunConfig& config, const std::string& out_dir);

/// Convergence study: one independent run per mesh (executed concurrently),
/// L1(H) error against the scenario's analytic reference at t_final.
struct ConvergenceRow {
  int cells = 0;
  double h = 0;
  double l1_h = 0;
  bool failed = false;
  std::string error;
};
struct ConvergenceResult {
  std::vector<ConvergenceRow> rows;
  double lsq_order = 0;
  std::vector<double> pairwise;
};
ConvergenceResult run_convergence_study(const RunConfig& base,
                                        const std::vector<int>& meshes,
                                        const std::string& out_dir = "");

/// CSV writers (17 significant digits, deterministic).
void write_snapshot_csv(const std::string& path, const Grid& grid,
                        const Bathymetry& bathy, const CellState& state,
                        const FacePressure& p);
void write_diagnostics_csv(const std::string& path,
                           const std::vector<StepDiagnostics>& rows);
void write_convergence_csv(const std::string& path, const ConvergenceResult& r);

/// Analytic reference snapshot for `swnh reference`.
void write_reference_csv(const std::string& path, const RunConfig& config,
                         double t);

}  // namespace swnh

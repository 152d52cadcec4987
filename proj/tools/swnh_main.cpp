#include <cstdio>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "swnh/common.hpp"
#include "swnh/config.hpp"
#include "swnh/simulation.hpp"

namespace {

std::vector<int> parse_mesh_list(const std::string& spec) {
  std::vector<int> meshes;
  std::string item;
  std::stringstream ss(spec);
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int cells = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      meshes.push_back(cells);
    } catch (const std::exception&) {
      throw swnh::ConfigError("bad --meshes entry: '" + item + "'");
    }
  }
  if (meshes.size() < 2)
    throw swnh::ConfigError("--meshes needs at least two comma-separated sizes");
  return meshes;
}

int run_command(const std::string& config_path,
                const std::vector<std::pair<std::string, std::string>>& overrides,
                const std::string& out_dir) {
  swnh::RunConfig config = swnh::parse_config(config_path);
  for (const auto& [key, value] : overrides)
    swnh::apply_override(config, key, value);
  config.validate();

  swnh::Simulation sim(config);
  std::cout << "# effective configuration\n";
  swnh::echo_config(sim.config(), std::cout);

  const swnh::RunResult result = sim.run(out_dir);
  const swnh::StepDiagnostics& last = result.diagnostics.back();
  std::cout << "# result\n";
  std::cout << "steps = " << result.steps << "\n";
  std::cout << "t_end = " << result.t_end << "\n";
  std::cout << "wall_clock_seconds = " << result.wall_clock_seconds << "\n";
  std::cout << "final_mass = " << last.mass << "\n";
  std::cout << "final_eta_total = " << last.eta_total << "\n";
  std::cout << "min_depth_seen = " << result.min_h_seen << "\n";
  std::cout << "worst_div_ratio = " << result.worst_div_ratio << "\n";
  std::cout << "total_clipped_faces = " << result.total_clipped_faces << "\n";
  return 0;
}

int converge_command(const std::string& config_path, const std::string& meshes,
                     const std::string& out_dir) {
  const swnh::RunConfig config = swnh::parse_config(config_path);
  const std::vector<int> mesh_list = parse_mesh_list(meshes);
  const swnh::ConvergenceResult result =
      swnh::run_convergence_study(config, mesh_list, out_dir);

  std::printf("%8s %14s %14s %10s  %s\n", "cells", "h", "l1_h", "order",
              "status");
  int ok_seen = 0;
  for (const swnh::ConvergenceRow& row : result.rows) {
    if (row.failed) {
      std::printf("%8d %14.6e %14s %10s  failed: %s\n", row.cells, row.h, "-",
                  "-", row.error.c_str());
      continue;
    }
    if (ok_seen >= 1 && ok_seen - 1 < static_cast<int>(result.pairwise.size()))
      std::printf("%8d %14.6e %14.6e %10.3f  ok\n", row.cells, row.h, row.l1_h,
                  result.pairwise[ok_seen - 1]);
    else
      std::printf("%8d %14.6e %14.6e %10s  ok\n", row.cells, row.h, row.l1_h,
                  "-");
    ++ok_seen;
  }
  std::printf("least_squares_order = %.4f\n", result.lsq_order);
  return 0;
}

int reference_command(const std::string& scenario, double t,
                      const std::string& out_file,
                      const std::string& config_path) {
  swnh::RunConfig config;
  if (!config_path.empty()) config = swnh::parse_config(config_path);
  swnh::apply_override(config, "scenario", scenario);
  swnh::write_reference_csv(out_file, config, t);
  std::cout << "wrote " << out_file << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "1-D depth-averaged Euler solver: kinetic finite-volume prediction with "
      "an elliptic non-hydrostatic pressure correction"};
  app.require_subcommand(1);

  // run
  CLI::App* run = app.add_subcommand("run", "Run one simulation");
  std::string run_config;
  run->add_option("--config", run_config, "config file (key = value lines)")
      ->required();
  std::string opt_cells, opt_order, opt_tfinal, opt_cfl, opt_alpha;
  std::string run_out;
  run->add_option("--cells", opt_cells, "override mesh size");
  run->add_option("--order", opt_order, "override space order (1 or 2)");
  run->add_option("--tfinal", opt_tfinal, "override final time (s)");
  run->add_option("--cfl", opt_cfl, "override CFL number");
  run->add_option("--alpha", opt_alpha, "override the operator parameter");
  run->add_option("--out", run_out, "output directory (snapshots, diagnostics)");

  // converge
  CLI::App* conv = app.add_subcommand("converge", "Mesh-refinement study");
  std::string conv_config, conv_meshes, conv_out;
  conv->add_option("--config", conv_config, "config file")->required();
  conv->add_option("--meshes", conv_meshes, "comma-separated cell counts")
      ->required();
  conv->add_option("--out", conv_out, "directory for convergence.csv");

  // reference
  CLI::App* ref = app.add_subcommand("reference", "Dump analytic fields");
  std::string ref_scenario, ref_out, ref_config;
  double ref_t = 0.0;
  ref->add_option("--scenario", ref_scenario, "scenario name")->required();
  ref->add_option("--t", ref_t, "sample time (s)")->required();
  ref->add_option("--out", ref_out, "output CSV path")->required();
  ref->add_option("--config", ref_config, "optional base config file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // malformed invocation is a configuration error
  }

  try {
    if (run->parsed()) {
      std::vector<std::pair<std::string, std::string>> overrides;
      if (!opt_cells.empty()) overrides.emplace_back("cells", opt_cells);
      if (!opt_order.empty()) overrides.emplace_back("order", opt_order);
      if (!opt_tfinal.empty()) overrides.emplace_back("t_final", opt_tfinal);
      if (!opt_cfl.empty()) overrides.emplace_back("cfl", opt_cfl);
      if (!opt_alpha.empty()) overrides.emplace_back("alpha", opt_alpha);
      return run_command(run_config, overrides, run_out);
    }
    if (conv->parsed()) return converge_command(conv_config, conv_meshes, conv_out);
    if (ref->parsed())
      return reference_command(ref_scenario, ref_t, ref_out, ref_config);
  } catch (const swnh::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const swnh::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

#pragma once

#include <iosfwd>
#include <limits>
#include <map>
#include <string>

#include "swnh/boundary.hpp"
#include "swnh/common.hpp"
#include "swnh/grid.hpp"

namespace swnh {

enum class Scenario {
  lake_at_rest,
  dam_break,
  parabolic_bowl,
  soliton,
  soliton_entering,
};

std::string to_string(Scenario s);
std::string to_string(BoundaryKind k);

/// Complete run description. Every field has a default; a config file is a
/// flat key = value list (UTF-8, '#' comments) whose unknown keys are
/// rejected with a message naming the key.
struct RunConfig {
  Scenario scenario = Scenario::dam_break;

  int cells = 100;
  double x_left = -5.0;
  double x_right = 5.0;

  int order = 1;        // 1 or 2
  double cfl = 0.5;     // in (0, 1]
  double t_final = 1.0;
  double alpha = 2.0;   // operator family parameter
  double epsilon = 1e-6;
  double g = 9.81;
  double max_dt = std::numeric_limits<double>::infinity();

  BoundaryKind bc_left = BoundaryKind::wall;
  BoundaryKind bc_right = BoundaryKind::wall;
  double bc_left_value = 0.0;   // Q0 or H0 depending on kind
  double bc_right_value = 0.0;

  std::string out_dir;            // empty = no file output
  double snapshot_interval = 0.0; // 0 = initial + final snapshots only

  std::string bathymetry_file;    // optional two-column table
  BathyQuadrature bathy_quadrature = BathyQuadrature::gauss2;

  // lake_at_rest: free surface level and a parabolic bump
  //   zb = max(0, bump_height (1 - ((x - bump_center)/bump_halfwidth)^2)).
  double surface_level = 1.0;
  double bump_height = 0.2;
  double bump_center = std::numeric_limits<double>::quiet_NaN();  // default: domain center
  double bump_halfwidth = std::numeric_limits<double>::quiet_NaN();  // default: length/8

  // dam_break
  double dam_hl = 2.0;
  double dam_hr = 1.0;
  double dam_x0 = 0.0;

  // parabolic_bowl (bowl_F0 defaults to 1/sqrt(g*b2), i.e. the reference
  // configuration's a/sqrt(g b2) with a = 1)
  double bowl_h0 = 1.0;
  double bowl_b1 = 0.0;
  double bowl_b2 = 1.0;
  double bowl_f0 = 0.0;
  double bowl_F0 = std::numeric_limits<double>::quiet_NaN();

  // soliton / soliton_entering
  double soliton_h0 = 1.0;
  double soliton_l = 1.7;
  double soliton_d = 1.0;
  double soliton_x0 = std::numeric_limits<double>::quiet_NaN();  // default: 0,
  // or for the entering variant x_left - 4*c0 (crest reaches the domain at ~4 s)

  /// Validates cross-field constraints; throws ConfigError.
  void validate() const;
};

/// Parse a config file. Unknown keys, malformed values, and out-of-range
/// settings raise ConfigError naming the offender.
RunConfig parse_config(const std::string& path);
RunConfig parse_config_stream(std::istream& in, const std::string& origin);

/// Apply "key=value" overrides (the CLI flags funnel through this so file and
/// flag parsing share validation).
void apply_override(RunConfig& config, const std::string& key,
                    const std::string& value);

/// Echo the effective configuration (defaults applied) as key = value lines.
void echo_config(const RunConfig& config, std::ostream& out);

}  // namespace swnh

#include "swnh/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <system_error>

namespace swnh {

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::lake_at_rest: return "lake_at_rest";
    case Scenario::dam_break: return "dam_break";
    case Scenario::parabolic_bowl: return "parabolic_bowl";
    case Scenario::soliton: return "soliton";
    case Scenario::soliton_entering: return "soliton_entering";
  }
  return "?";
}

std::string to_string(BoundaryKind k) {
  switch (k) {
    case BoundaryKind::wall: return "wall";
    case BoundaryKind::periodic: return "periodic";
    case BoundaryKind::given_flux: return "given_flux";
    case BoundaryKind::given_depth: return "given_depth";
  }
  return "?";
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

double parse_double(const std::string& key, const std::string& value) {
  double out = 0.0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc{} || ptr != end)
    throw ConfigError("value for '" + key + "' is not a number: '" + value +
                      "'");
  return out;
}

int parse_int(const std::string& key, const std::string& value) {
  int out = 0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc{} || ptr != end)
    throw ConfigError("value for '" + key + "' is not an integer: '" + value +
                      "'");
  return out;
}

Scenario parse_scenario(const std::string& value) {
  if (value == "lake_at_rest") return Scenario::lake_at_rest;
  if (value == "dam_break") return Scenario::dam_break;
  if (value == "parabolic_bowl") return Scenario::parabolic_bowl;
  if (value == "soliton") return Scenario::soliton;
  if (value == "soliton_entering") return Scenario::soliton_entering;
  throw ConfigError(
      "unknown scenario '" + value +
      "' (expected lake_at_rest, dam_break, parabolic_bowl, soliton, or "
      "soliton_entering)");
}

BoundaryKind parse_bc(const std::string& key, const std::string& value) {
  if (value == "wall") return BoundaryKind::wall;
  if (value == "periodic") return BoundaryKind::periodic;
  if (value == "given_flux") return BoundaryKind::given_flux;
  if (value == "given_depth") return BoundaryKind::given_depth;
  throw ConfigError("unknown boundary kind for '" + key + "': '" + value +
                    "' (expected wall, periodic, given_flux, or given_depth)");
}

BathyQuadrature parse_quadrature(const std::string& value) {
  if (value == "gauss2") return BathyQuadrature::gauss2;
  if (value == "midpoint") return BathyQuadrature::midpoint;
  throw ConfigError("unknown bathy_quadrature '" + value +
                    "' (expected gauss2 or midpoint)");
}

std::string format_double(double v) {
  if (std::isnan(v)) return "auto";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace

void apply_override(RunConfig& config, const std::string& key_raw,
                    const std::string& value_raw) {
  const std::string key = trim(key_raw);
  const std::string value = trim(value_raw);
  if (key.empty()) throw ConfigError("empty config key");

  if (key == "scenario") {
    config.scenario = parse_scenario(value);
  } else if (key == "cells") {
    config.cells = parse_int(key, value);
  } else if (key == "x_left") {
    config.x_left = parse_double(key, value);
  } else if (key == "x_right") {
    config.x_right = parse_double(key, value);
  } else if (key == "order") {
    int order = 0;
    try {
      order = parse_int(key, value);
    } catch (const ConfigError&) {
      throw ConfigError("order must be 1 or 2");
    }
    if (order != 1 && order != 2) throw ConfigError("order must be 1 or 2");
    config.order = order;
  } else if (key == "cfl") {
    config.cfl = parse_double(key, value);
  } else if (key == "t_final") {
    config.t_final = parse_double(key, value);
  } else if (key == "alpha") {
    config.alpha = parse_double(key, value);
  } else if (key == "epsilon") {
    config.epsilon = parse_double(key, value);
  } else if (key == "g") {
    config.g = parse_double(key, value);
  } else if (key == "max_dt") {
    config.max_dt = parse_double(key, value);
  } else if (key == "bc_left") {
    config.bc_left = parse_bc(key, value);
  } else if (key == "bc_right") {
    config.bc_right = parse_bc(key, value);
  } else if (key == "bc_left_value") {
    config.bc_left_value = parse_double(key, value);
  } else if (key == "bc_right_value") {
    config.bc_right_value = parse_double(key, value);
  } else if (key == "out_dir") {
    config.out_dir = value;
  } else if (key == "snapshot_interval") {
    config.snapshot_interval = parse_double(key, value);
  } else if (key == "bathymetry_file") {
    config.bathymetry_file = value;
  } else if (key == "bathy_quadrature") {
    config.bathy_quadrature = parse_quadrature(value);
  } else if (key == "surface_level") {
    config.surface_level = parse_double(key, value);
  } else if (key == "bump_height") {
    config.bump_height = parse_double(key, value);
  } else if (key == "bump_center") {
    config.bump_center = parse_double(key, value);
  } else if (key == "bump_halfwidth") {
    config.bump_halfwidth = parse_double(key, value);
  } else if (key == "dam_hl") {
    config.dam_hl = parse_double(key, value);
  } else if (key == "dam_hr") {
    config.dam_hr = parse_double(key, value);
  } else if (key == "dam_x0") {
    config.dam_x0 = parse_double(key, value);
  } else if (key == "bowl_h0") {
    config.bowl_h0 = parse_double(key, value);
  } else if (key == "bowl_b1") {
    config.bowl_b1 = parse_double(key, value);
  } else if (key == "bowl_b2") {
    config.bowl_b2 = parse_double(key, value);
  } else if (key == "bowl_f0") {
    config.bowl_f0 = parse_double(key, value);
  } else if (key == "bowl_F0") {
    config.bowl_F0 = parse_double(key, value);
  } else if (key == "soliton_h0") {
    config.soliton_h0 = parse_double(key, value);
  } else if (key == "soliton_l") {
    config.soliton_l = parse_double(key, value);
  } else if (key == "soliton_d") {
    config.soliton_d = parse_double(key, value);
  } else if (key == "soliton_x0") {
    config.soliton_x0 = parse_double(key, value);
  } else {
    throw ConfigError("unknown config key: '" + key + "'");
  }
}

void RunConfig::validate() const {
  if (cells < 3) throw ConfigError("cells must be at least 3");
  if (!(x_right > x_left))
    throw ConfigError("domain is empty: x_right must exceed x_left");
  if (order != 1 && order != 2) throw ConfigError("order must be 1 or 2");
  if (!(cfl > 0.0) || cfl > 1.0) throw ConfigError("cfl must be in (0, 1]");
  if (!(t_final >= 0.0)) throw ConfigError("t_final must be nonnegative");
  if (!(alpha > 0.0)) throw ConfigError("alpha must be positive");
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  if (!(g > 0.0)) throw ConfigError("g must be positive");
  if (!(max_dt > 0.0)) throw ConfigError("max_dt must be positive");
  if (!(snapshot_interval >= 0.0))
    throw ConfigError("snapshot_interval must be nonnegative");
  if ((bc_left == BoundaryKind::periodic) !=
      (bc_right == BoundaryKind::periodic))
    throw ConfigError("periodic boundaries must be set on both sides");
  if (bc_left == BoundaryKind::given_depth && !(bc_left_value > 0.0))
    throw ConfigError("given_depth on the left needs a positive bc_left_value");
  if (bc_right == BoundaryKind::given_depth && !(bc_right_value > 0.0))
    throw ConfigError(
        "given_depth on the right needs a positive bc_right_value");

  switch (scenario) {
    case Scenario::lake_at_rest:
      if (!std::isnan(bump_halfwidth) && !(bump_halfwidth > 0.0))
        throw ConfigError("bump_halfwidth must be positive");
      break;
    case Scenario::dam_break:
      if (dam_hl < 0.0 || dam_hr < 0.0)
        throw ConfigError("dam depths must be nonnegative");
      break;
    case Scenario::parabolic_bowl:
      if (!(bowl_h0 > 0.0)) throw ConfigError("bowl_h0 must be positive");
      if (!(bowl_b2 > 0.0)) throw ConfigError("bowl_b2 must be positive");
      break;
    case Scenario::soliton:
    case Scenario::soliton_entering:
      if (!(soliton_h0 > 0.0) || !(soliton_l > soliton_h0))
        throw ConfigError("solitary wave requires soliton_l > soliton_h0 > 0");
      if (soliton_d == 0.0) throw ConfigError("soliton_d must be nonzero");
      break;
  }
  if (!bathymetry_file.empty() &&
      (scenario == Scenario::parabolic_bowl || scenario == Scenario::soliton ||
       scenario == Scenario::soliton_entering))
    throw ConfigError("bathymetry_file cannot override the " +
                      to_string(scenario) + " scenario's bathymetry");
}

RunConfig parse_config_stream(std::istream& in, const std::string& origin) {
  RunConfig config;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.size() >= 3 && line[0] == '\xEF' &&
        line[1] == '\xBB' && line[2] == '\xBF')
      line.erase(0, 3);  // UTF-8 BOM
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(line_no) +
                        ": expected 'key = value', got '" + stripped + "'");
    try {
      apply_override(config, stripped.substr(0, eq), stripped.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": " +
                        e.what());
    }
  }
  config.validate();
  return config;
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  return parse_config_stream(in, path);
}

void echo_config(const RunConfig& config, std::ostream& out) {
  out << "scenario = " << to_string(config.scenario) << "\n";
  out << "cells = " << config.cells << "\n";
  out << "x_left = " << format_double(config.x_left) << "\n";
  out << "x_right = " << format_double(config.x_right) << "\n";
  out << "order = " << config.order << "\n";
  out << "cfl = " << format_double(config.cfl) << "\n";
  out << "t_final = " << format_double(config.t_final) << "\n";
  out << "alpha = " << format_double(config.alpha) << "\n";
  out << "epsilon = " << format_double(config.epsilon) << "\n";
  out << "g = " << format_double(config.g) << "\n";
  out << "max_dt = " << format_double(config.max_dt) << "\n";
  out << "bc_left = " << to_string(config.bc_left) << "\n";
  out << "bc_right = " << to_string(config.bc_right) << "\n";
  out << "bc_left_value = " << format_double(config.bc_left_value) << "\n";
  out << "bc_right_value = " << format_double(config.bc_right_value) << "\n";
  out << "out_dir = " << config.out_dir << "\n";
  out << "snapshot_interval = " << format_double(config.snapshot_interval)
      << "\n";
  out << "bathymetry_file = " << config.bathymetry_file << "\n";
  out << "bathy_quadrature = "
      << (config.bathy_quadrature == BathyQuadrature::gauss2 ? "gauss2"
                                                             : "midpoint")
      << "\n";
  switch (config.scenario) {
    case Scenario::lake_at_rest:
      out << "surface_level = " << format_double(config.surface_level) << "\n";
      out << "bump_height = " << format_double(config.bump_height) << "\n";
      out << "bump_center = " << format_double(config.bump_center) << "\n";
      out << "bump_halfwidth = " << format_double(config.bump_halfwidth)
          << "\n";
      break;
    case Scenario::dam_break:
      out << "dam_hl = " << format_double(config.dam_hl) << "\n";
      out << "dam_hr = " << format_double(config.dam_hr) << "\n";
      out << "dam_x0 = " << format_double(config.dam_x0) << "\n";
      break;
    case Scenario::parabolic_bowl:
      out << "bowl_h0 = " << format_double(config.bowl_h0) << "\n";
      out << "bowl_b1 = " << format_double(config.bowl_b1) << "\n";
      out << "bowl_b2 = " << format_double(config.bowl_b2) << "\n";
      out << "bowl_f0 = " << format_double(config.bowl_f0) << "\n";
      out << "bowl_F0 = " << format_double(config.bowl_F0) << "\n";
      break;
    case Scenario::soliton:
    case Scenario::soliton_entering:
      out << "soliton_h0 = " << format_double(config.soliton_h0) << "\n";
      out << "soliton_l = " << format_double(config.soliton_l) << "\n";
      out << "soliton_d = " << format_double(config.soliton_d) << "\n";
      out << "soliton_x0 = " << format_double(config.soliton_x0) << "\n";
      break;
  }
}

}  // namespace swnh

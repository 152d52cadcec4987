#pragma once

#include <stdexcept>
#include <string>

namespace swnh {

/// Depth below which a cell counts as dry: velocities are defined as q/H only
/// above this threshold and are zero by convention underneath it.
inline constexpr double kDryDepth = 1e-10;

/// Raised for malformed configuration (maps to process exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when the scheme breaks down numerically: CFL violation producing a
/// negative depth, singular elliptic solve, time-step collapse (exit code 3).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace swnh

#pragma once

#include <vector>

#include "swnh/common.hpp"

namespace swnh {

/// Oscillating parabolic bowl. The wet lens H = (H0 - (b2/2)(x - F)^2)_+
/// sloshes in the basin z_b = b1 + (b2/2) x^2; F(t) is the lens-center offset
/// (the running integral of f) and f(t) the uniform horizontal velocity,
/// governed by f' = -b2 (g + b2 f^2) F, F' = f.
struct BowlParams {
  double h0 = 1.0;   // lens depth at its vertex (m)
  double b1 = 0.0;   // basin offset (m)
  double b2 = 1.0;   // basin curvature (1/m)
  double f0 = 0.0;   // f at t = 0 (m/s)
  double F0 = 0.0;   // F at t = 0 (m)
  double g = 9.81;
};

/// Pointwise bowl fields for given phase (f, F).
struct BowlFields {
  double h = 0, u = 0, w = 0, p_nh = 0, s = 0;
};
BowlFields bowl_fields(const BowlParams& params, double f, double F, double x);

double bowl_bathymetry(const BowlParams& params, double x);

/// RK4 integration of the phase ODE with a checkpoint table, so that
/// phase(t) costs one short re-integration from the nearest stored checkpoint
/// (sub-step <= 1e-4 s everywhere, checkpoint spacing 0.01 s).
class BowlSolution {
 public:
  BowlSolution(const BowlParams& params, double t_max, double sub_step = 1e-4);

  struct Phase {
    double f = 0, F = 0;
  };
  Phase phase(double t) const;  // t in [0, t_max]

  BowlFields fields(double x, double t) const;
  const BowlParams& params() const { return params_; }

 private:
  BowlParams params_;
  double t_max_, checkpoint_dt_, sub_step_;
  std::vector<Phase> checkpoints_;
};

/// Single RK4 integration of the bowl phase ODE from t=0 to t with a fixed
/// sub-step (exact landing on t). Exposed for self-convergence tests.
BowlSolution::Phase integrate_bowl_ode(const BowlParams& params, double t,
                                       double sub_step);

/// Solitary wave of the dispersive system over a flat bottom:
///   H = H0 + a sech^2(theta), theta = (x - x0 - c0 t)/l,
///   a = H0^3/(l^2 - H0^2), c0 = (l/d) sqrt(g H0^3/(l^2 - H0^2)).
/// Requires l > H0 > 0 and d != 0 (ConfigError otherwise).
struct SolitonParams {
  double h0 = 1.0;
  double l = 1.7;
  double d = 1.0;
  double x0 = 0.0;  // crest position at t = 0
  double g = 9.81;
};

class SolitonSolution {
 public:
  explicit SolitonSolution(const SolitonParams& params);

  double amplitude() const { return a_; }
  double celerity() const { return c0_; }

  double h(double x, double t) const;
  double u(double x, double t) const;
  double w(double x, double t) const;
  double p_nh(double x, double t) const;
  double discharge(double x, double t) const;  // H*u = c0 (H - d)
  const SolitonParams& params() const { return params_; }

 private:
  SolitonParams params_;
  double a_, c0_;
};

}  // namespace swnh

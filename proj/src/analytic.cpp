#include "swnh/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace swnh {

BowlFields bowl_fields(const BowlParams& params, double f, double F, double x) {
  BowlFields out;
  const double dx = x - F;
  const double h = params.h0 - 0.5 * params.b2 * dx * dx;
  out.s = params.b2 * x * (-params.b2 * (params.g + params.b2 * f * f) * F);
  if (h <= 0.0) return out;  // dry: velocities and pressure vanish
  out.h = h;
  out.u = f;
  out.w = params.b2 * x * f;
  out.p_nh = 0.5 * params.b2 * f * f * h;
  return out;
}

double bowl_bathymetry(const BowlParams& params, double x) {
  return params.b1 + 0.5 * params.b2 * x * x;
}

namespace {

// One RK4 step of (f, F)' = (-b2 (g + b2 f^2) F, f).
BowlSolution::Phase rk4_step(const BowlParams& p, BowlSolution::Phase y,
                             double h) {
  auto rhs = [&p](BowlSolution::Phase s) {
    return BowlSolution::Phase{-p.b2 * (p.g + p.b2 * s.f * s.f) * s.F, s.f};
  };
  auto advance = [](BowlSolution::Phase s, BowlSolution::Phase k, double c) {
    return BowlSolution::Phase{s.f + c * k.f, s.F + c * k.F};
  };
  const BowlSolution::Phase k1 = rhs(y);
  const BowlSolution::Phase k2 = rhs(advance(y, k1, 0.5 * h));
  const BowlSolution::Phase k3 = rhs(advance(y, k2, 0.5 * h));
  const BowlSolution::Phase k4 = rhs(advance(y, k3, h));
  y.f += h / 6.0 * (k1.f + 2.0 * k2.f + 2.0 * k3.f + k4.f);
  y.F += h / 6.0 * (k1.F + 2.0 * k2.F + 2.0 * k3.F + k4.F);
  return y;
}

BowlSolution::Phase integrate_between(const BowlParams& params,
                                      BowlSolution::Phase y, double span,
                                      double sub_step) {
  if (span <= 0.0) return y;
  const int steps = std::max(1, static_cast<int>(std::ceil(span / sub_step)));
  const double h = span / steps;
  for (int k = 0; k < steps; ++k) y = rk4_step(params, y, h);
  return y;
}

}  // namespace

BowlSolution::BowlSolution(const BowlParams& params, double t_max,
                           double sub_step)
    : params_(params),
      t_max_(std::max(t_max, 0.0)),
      checkpoint_dt_(0.01),
      sub_step_(sub_step) {
  if (!(sub_step > 0.0)) throw ConfigError("bowl ODE sub-step must be positive");
  const int count = static_cast<int>(std::ceil(t_max_ / checkpoint_dt_)) + 1;
  checkpoints_.reserve(static_cast<std::size_t>(count));
  Phase y{params_.f0, params_.F0};
  checkpoints_.push_back(y);
  for (int k = 1; k < count; ++k) {
    y = integrate_between(params_, y, checkpoint_dt_, sub_step_);
    checkpoints_.push_back(y);
  }
}

BowlSolution::Phase BowlSolution::phase(double t) const {
  if (t <= 0.0) return checkpoints_.front();
  const int idx = std::min(static_cast<int>(t / checkpoint_dt_),
                           static_cast<int>(checkpoints_.size()) - 1);
  const double t_base = idx * checkpoint_dt_;
  return integrate_between(params_, checkpoints_[idx], t - t_base, sub_step_);
}

BowlFields BowlSolution::fields(double x, double t) const {
  const Phase ph = phase(t);
  return bowl_fields(params_, ph.f, ph.F, x);
}

BowlSolution::Phase integrate_bowl_ode(const BowlParams& params, double t,
                                       double sub_step) {
  if (!(sub_step > 0.0)) throw ConfigError("bowl ODE sub-step must be positive");
  return integrate_between(params, {params.f0, params.F0}, t, sub_step);
}

SolitonSolution::SolitonSolution(const SolitonParams& params) : params_(params) {
  if (!(params.h0 > 0.0) || !(params.l > params.h0))
    throw ConfigError("solitary wave requires l > h0 > 0");
  if (params.d == 0.0) throw ConfigError("solitary wave requires d != 0");
  const double denom = params.l * params.l - params.h0 * params.h0;
  a_ = params.h0 * params.h0 * params.h0 / denom;
  c0_ = params.l / params.d *
        std::sqrt(params.g * params.h0 * params.h0 * params.h0 / denom);
}

namespace {

struct SechKit {
  double s;    // sech(theta)
  double sp;   // sech'(theta) = -sech tanh
  double spp;  // sech''(theta) = sech (1 - 2 sech^2)  [= sech(tanh^2 - sech^2)]
};

SechKit sech_kit(double theta) {
  SechKit k;
  k.s = 1.0 / std::cosh(theta);
  k.sp = -k.s * std::tanh(theta);
  k.spp = k.s * (1.0 - 2.0 * k.s * k.s);
  return k;
}

}  // namespace

double SolitonSolution::h(double x, double t) const {
  const double theta = (x - params_.x0 - c0_ * t) / params_.l;
  const double s = 1.0 / std::cosh(theta);
  return params_.h0 + a_ * s * s;
}

double SolitonSolution::u(double x, double t) const {
  return c0_ * (1.0 - params_.d / h(x, t));
}

double SolitonSolution::w(double x, double t) const {
  const double theta = (x - params_.x0 - c0_ * t) / params_.l;
  const SechKit k = sech_kit(theta);
  return -a_ * c0_ * params_.d / (params_.l * h(x, t)) * k.s * k.sp;
}

double SolitonSolution::p_nh(double x, double t) const {
  const double theta = (x - params_.x0 - c0_ * t) / params_.l;
  const SechKit k = sech_kit(theta);
  const double hh = h(x, t);
  const double pref = a_ * c0_ * c0_ * params_.d * params_.d /
                      (2.0 * params_.l * params_.l * hh * hh);
  return pref *
         ((2.0 * params_.h0 - hh) * k.sp * k.sp + hh * k.s * k.spp);
}

double SolitonSolution::discharge(double x, double t) const {
  return c0_ * (h(x, t) - params_.d);
}

}  // namespace swnh

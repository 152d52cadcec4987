#include "swnh/kinetic_flux.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace swnh {

namespace {

constexpr double kPi = std::numbers::pi;

// Antiderivatives over the shifted variable t = xi - u with s = sqrt(A - t^2),
// A = 2gH:
//   P0 = int sqrt(A - t^2) dt          P1 = int t   sqrt(A - t^2) dt
//   P2 = int t^2 sqrt(A - t^2) dt      P3 = int t^3 sqrt(A - t^2) dt
//   Pc = int (A - t^2)^{3/2} dt        Pq = int t (A - t^2)^{3/2} dt
// s^2 is evaluated as (sqrt(A) - t)(sqrt(A) + t): at the clamped support
// endpoints t = +-sqrt(A) the naive A - t^2 leaves O(ulp) residue whose square
// root contaminates the moments at ~1e-6.
struct Primitives {
  double p0, p1, p2, p3, pc, pq;
};

Primitives primitives_at(double t, double A, double sqrtA) {
  const double s2 = std::max((sqrtA - t) * (sqrtA + t), 0.0);
  const double s = std::sqrt(s2);
  const double s3 = s2 * s;
  const double ratio = std::clamp(sqrtA > 0 ? t / sqrtA : 0.0, -1.0, 1.0);
  const double wedge = t * s + A * std::asin(ratio);
  Primitives p;
  p.p0 = 0.5 * wedge;
  p.p1 = -s3 / 3.0;
  p.p2 = -t * s3 / 4.0 + (A / 8.0) * wedge;
  p.p3 = s2 * s3 / 5.0 - A * s3 / 3.0;
  p.pc = t * s3 / 4.0 + (3.0 * A / 8.0) * wedge;
  p.pq = -s2 * s3 / 5.0;
  return p;
}

HalfMoments half_moments(double h, double u, double g, bool positive) {
  HalfMoments m;
  if (!(h > 0)) return m;  // degenerate support: all moments vanish
  const double A = 2.0 * g * h;
  const double sqrtA = std::sqrt(A);
  double a, b;  // integration bounds in t = xi - u
  if (positive) {
    a = std::max(-u, -sqrtA);
    b = sqrtA;
  } else {
    a = -sqrtA;
    b = std::min(-u, sqrtA);
  }
  if (!(a < b)) return m;

  const Primitives lo = primitives_at(a, A, sqrtA);
  const Primitives hi = primitives_at(b, A, sqrtA);
  const double d0 = hi.p0 - lo.p0;
  const double d1 = hi.p1 - lo.p1;
  const double d2 = hi.p2 - lo.p2;
  const double d3 = hi.p3 - lo.p3;
  const double dc = hi.pc - lo.pc;
  const double dq = hi.pq - lo.pq;

  const double c = 1.0 / (g * kPi);
  m.m0 = c * d0;
  m.m1 = c * (d1 + u * d0);
  m.m2 = c * (d2 + 2.0 * u * d1 + u * u * d0);
  m.m3 = c * (d3 + 3.0 * u * d2 + 3.0 * u * u * d1 + u * u * u * d0);
  m.mc = c * c * c * (dq + u * dc);
  return m;
}

}  // namespace

double chi(double z) {
  const double arg = 1.0 - 0.25 * z * z;
  return arg > 0 ? std::sqrt(arg) / kPi : 0.0;
}

double maxwellian(double h, double u, double xi, double g) {
  if (!(h > 0)) return 0.0;
  const double c = std::sqrt(0.5 * g * h);
  return (h / c) * chi((xi - u) / c);
}

HalfMoments positive_half_moments(double h, double u, double g) {
  return half_moments(h, u, g, true);
}

HalfMoments negative_half_moments(double h, double u, double g) {
  return half_moments(h, u, g, false);
}

KineticFluxPair homogeneous_kinetic_flux(double h_left, double u_left,
                                         double h_right, double u_right,
                                         double g) {
  const HalfMoments up = positive_half_moments(h_left, u_left, g);
  const HalfMoments down = negative_half_moments(h_right, u_right, g);
  return {up.m1 + down.m1, up.m2 + down.m2};
}

double hydrostatic_entropy_flux(double h_left, double u_left, double h_right,
                                double u_right, double z_star, double g) {
  const HalfMoments up = positive_half_moments(h_left, u_left, g);
  const HalfMoments down = negative_half_moments(h_right, u_right, g);
  const double m1 = up.m1 + down.m1;
  const double m3 = up.m3 + down.m3;
  const double mc = up.mc + down.mc;
  return 0.5 * m3 + (g * g * kPi * kPi / 6.0) * mc + g * z_star * m1;
}

}  // namespace swnh

#pragma once

namespace swnh {

/// Compact-support kinetic density chi(z) = (1/pi) * (1 - z^2/4)_+^{1/2}.
double chi(double z);

/// Equilibrium density M(H, u, xi) = (H/c) chi((xi - u)/c), c = sqrt(gH/2),
/// which evaluates to (1/(g*pi)) * (2gH - (xi-u)^2)_+^{1/2}; zero when H = 0.
double maxwellian(double h, double u, double xi, double g);

/// Half-line xi-moments of the Maxwellian:
///   mk = integral of xi^k M(H,u,xi) dxi   over xi > 0 (or xi < 0),  k = 0..3
///   mc = integral of xi  M(H,u,xi)^3 dxi  over the same half-line.
/// Evaluated in closed form; the degenerate H -> 0 limit returns all zeros.
struct HalfMoments {
  double m0 = 0, m1 = 0, m2 = 0, m3 = 0, mc = 0;
};
HalfMoments positive_half_moments(double h, double u, double g);
HalfMoments negative_half_moments(double h, double u, double g);

/// Homogeneous kinetic flux between two states:
///   F = int_{xi>0} xi (1, xi)^T M_L dxi + int_{xi<0} xi (1, xi)^T M_R dxi.
/// Consistency: F(X, X) = (Hu, Hu^2 + g H^2/2).
struct KineticFluxPair {
  double f_h = 0;   // mass flux (m^2/s)
  double f_qx = 0;  // horizontal momentum flux (m^3/s^2)
};
KineticFluxPair homogeneous_kinetic_flux(double h_left, double u_left,
                                         double h_right, double u_right,
                                         double g);

/// Kinetic entropy flux of the hydrostatic part at an interface,
///   G_hyd = int_{xi>0} xi H_K(M_L, xi, z*) + int_{xi<0} xi H_K(M_R, xi, z*),
/// with H_K(f, xi, z) = xi^2 f / 2 + g^2 pi^2 f^3 / 6 + g z f. Used by the
/// energy-budget diagnostics, not by the scheme itself.
double hydrostatic_entropy_flux(double h_left, double u_left, double h_right,
                                double u_right, double z_star, double g);

}  // namespace swnh

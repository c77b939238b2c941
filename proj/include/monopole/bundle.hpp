#pragma once

#include <array>
#include <complex>

#include "monopole/config.hpp"
#include "monopole/geometry.hpp"
#include "monopole/quaternion.hpp"

namespace monopole {

/// Point of the punctured C^2, total space of the principal U(1) bundle.
struct HopfPoint {
  std::complex<double> z1;
  std::complex<double> z2;

  double norm2() const { return std::norm(z1) + std::norm(z2); }
};

/// Polar angle theta in (0, pi), azimuth phi in (-pi, pi].
struct SphericalAngles {
  double theta = 0.0;
  double phi = 0.0;
};

/// Angles of x. Rejects points with sin(theta) < 1e-8.
SphericalAngles angles_of(const Vec3& x);
Vec3 point_on_sphere(const SphericalAngles& angles, double r = 1.0);

/// x^j = z^dagger sigma_j z.
Vec3 hopf_project(const HopfPoint& z);

/// Local sections s_+ (regular off the negative z axis) and s_-.
HopfPoint local_section(Chart chart, const Vec3& x, const Exclusion& excl = {});

/// (s_chart)^* omega evaluated on `dir`, with omega = i Im(z^dagger dz)/|z|^2.
/// Purely imaginary.
std::complex<double> omega_pullback(Chart chart, const Vec3& x, const Vec3& dir,
                                    const MonopoleConfig& cfg);

/// Components k = 0, 1, 2 of the globally regular su(2) potential s^*Omega,
/// A_k = (1/2) eps_ijk (x^i / |x|^2) e_j.
std::array<Quaternion, 3> su2_potential(const Vec3& x, const Exclusion& excl = {});

/// j(x) = x^k e_k / |x|.
Quaternion j_field(const Vec3& x, const Exclusion& excl = {});

/// SU(2) gauge matrix g(theta, phi) relating the section h o s_+ to the
/// canonical global section, as a unit quaternion.
Quaternion gauge_matrix(const SphericalAngles& angles);

/// Matrix with g^{-1} dg = -i eps_ijk x^i/|x|^2 sigma^j dx^k (the g = 2 potential
/// is a pure gauge).
Quaternion flat_gauge_matrix(const SphericalAngles& angles);

/// Parallel transport factor of s^*Omega along the straight segment
/// start -> start + d: midpoint product of exp(A(mid).delta) over `steps`
/// pieces. (V(d) Psi)(start) = segment_transport(start, d) * Psi(start + d).
Quaternion segment_transport(const Vec3& start, const Vec3& d, int steps,
                             const Exclusion& excl = {});

/// Closed form of the same transport: along a line the potential keeps a
/// fixed direction, so the factor is an exact rotation quaternion.
Quaternion segment_transport_exact(const Vec3& start, const Vec3& d, const Exclusion& excl = {});

/// Holonomy of s^*Omega around a closed loop based at its first vertex,
/// as the left-to-right product of exp(+int s^*Omega) over subdivided segments
/// in traversal order; `steps` pieces per segment.
Quaternion path_ordered_exp(const Polyline& loop, int steps, const Exclusion& excl = {});

/// exp{-(Phi/hbar) j(x)} with Phi the flux through triangle(x; a, b) at eg = hbar/2.
Quaternion quaternion_multiplier(const Vec3& x, const Vec3& a, const Vec3& b, double hbar,
                                 const Exclusion& excl = {});

/// m(x; a, b) = exp{-(i/hbar) flux}.
std::complex<double> complex_multiplier(const Vec3& x, const Vec3& a, const Vec3& b,
                                        const MonopoleConfig& cfg);

/// |m(x;a,b) m(x;a+b,c) - m(x+a;b,c) m(x;a,b+c)|.
double cocycle_residual(const Vec3& x, const Vec3& a, const Vec3& b, const Vec3& c,
                        const MonopoleConfig& cfg);

}  // namespace monopole

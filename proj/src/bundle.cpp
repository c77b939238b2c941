#include "monopole/bundle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "monopole/errors.hpp"

namespace monopole {

namespace {

using C = std::complex<double>;

void require_off_origin(const Vec3& x, const Exclusion& excl, const char* who) {
  if (!(norm(x) >= excl.r_min))
    throw DomainError(fmt::format("{}: point inside the origin exclusion", who));
}

void require_off_string(Chart chart, const Vec3& x, const Exclusion& excl, const char* who) {
  require_off_origin(x, excl, who);
  const bool on_string_side = chart == Chart::Plus ? x.z() < 0.0 : x.z() > 0.0;
  if (on_string_side && std::hypot(x.x(), x.y()) < excl.string_eps)
    throw DomainError(fmt::format("{}: point too close to the {} chart string", who,
                                  chart_name(chart)));
}

}  // namespace

SphericalAngles angles_of(const Vec3& x) {
  const double rho = std::hypot(x.x(), x.y());
  const double r = norm(x);
  if (!(r > 0.0) || rho < 1e-8 * r)
    throw DomainError("angles_of: point on the z axis (sin(theta) < 1e-8)");
  return {std::atan2(rho, x.z()), std::atan2(x.y(), x.x())};
}

Vec3 point_on_sphere(const SphericalAngles& a, double r) {
  return {r * std::sin(a.theta) * std::cos(a.phi), r * std::sin(a.theta) * std::sin(a.phi),
          r * std::cos(a.theta)};
}

Vec3 hopf_project(const HopfPoint& z) {
  if (!(z.norm2() > 0.0)) throw DomainError("hopf_project: z = 0");
  const C w = std::conj(z.z1) * z.z2;
  return {2.0 * w.real(), 2.0 * w.imag(), std::norm(z.z1) - std::norm(z.z2)};
}

// Cartesian forms of the sections:
//   s_+ : z1 = sqrt((r+z)/2),             z2 = (x + i y) / sqrt(2(r+z))
//   s_- : z1 = (x - i y) / sqrt(2(r-z)),  z2 = sqrt((r-z)/2)
// which equal sqrt(r) cos(theta/2) etc. and stay smooth on the regular axis.
HopfPoint local_section(Chart chart, const Vec3& x, const Exclusion& excl) {
  require_off_string(chart, x, excl, "local_section");
  const double r = norm(x);
  if (chart == Chart::Plus) {
    const double s = r + x.z();
    return {C(std::sqrt(0.5 * s), 0.0), C(x.x(), x.y()) / std::sqrt(2.0 * s)};
  }
  const double s = r - x.z();
  return {C(x.x(), -x.y()) / std::sqrt(2.0 * s), C(std::sqrt(0.5 * s), 0.0)};
}

std::complex<double> omega_pullback(Chart chart, const Vec3& x, const Vec3& dir,
                                    const MonopoleConfig& cfg) {
  const auto& excl = cfg.exclusion();
  const HopfPoint z = local_section(chart, x, excl);
  const double r = norm(x);
  const double dr = dot(x, dir) / r;
  C dz1, dz2;
  if (chart == Chart::Plus) {
    const double s = r + x.z(), ds = dr + dir.z();
    dz1 = C(ds / (2.0 * std::sqrt(2.0 * s)), 0.0);
    dz2 = C(dir.x(), dir.y()) / std::sqrt(2.0 * s)
        - C(x.x(), x.y()) * (ds / (2.0 * s * std::sqrt(2.0 * s)));
  } else {
    const double s = r - x.z(), ds = dr - dir.z();
    dz1 = C(dir.x(), -dir.y()) / std::sqrt(2.0 * s)
        - C(x.x(), -x.y()) * (ds / (2.0 * s * std::sqrt(2.0 * s)));
    dz2 = C(ds / (2.0 * std::sqrt(2.0 * s)), 0.0);
  }
  const C zdz = std::conj(z.z1) * dz1 + std::conj(z.z2) * dz2;
  return C(0.0, zdz.imag() / z.norm2());
}

std::array<Quaternion, 3> su2_potential(const Vec3& x, const Exclusion& excl) {
  require_off_origin(x, excl, "su2_potential");
  const double r2 = norm2(x);
  std::array<Quaternion, 3> A{};
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int i = 0; i < 3; ++i) s += levi_civita(i, j, k) * x[i];
      A[static_cast<std::size_t>(k)].v[j] = 0.5 * s / r2;
    }
  return A;
}

Quaternion j_field(const Vec3& x, const Exclusion& excl) {
  require_off_origin(x, excl, "j_field");
  return Quaternion::imaginary(x / norm(x));
}

Quaternion gauge_matrix(const SphericalAngles& a) {
  const double c = std::cos(0.5 * a.theta), s = std::sin(0.5 * a.theta);
  const C e = std::polar(1.0, a.phi);
  const Mat2c g{C(c, 0.0), s * std::conj(e), -s * e, C(c, 0.0)};
  return from_su2(g);
}

Quaternion flat_gauge_matrix(const SphericalAngles& a) {
  const double c = std::cos(a.theta), s = std::sin(a.theta);
  const C e = std::polar(1.0, a.phi);
  const Mat2c g{s * e, C(-c, 0.0), C(c, 0.0), s * std::conj(e)};
  return from_su2(g);
}

namespace {

// A(y).d for the su(2) potential: (1/2) (d x y) . e / |y|^2.
Vec3 potential_along(const Vec3& y, const Vec3& d) { return (0.5 / norm2(y)) * cross(d, y); }

}  // namespace

Quaternion segment_transport(const Vec3& start, const Vec3& d, int steps, const Exclusion& excl) {
  if (steps < 1) throw std::invalid_argument("segment_transport: steps must be >= 1");
  if (origin_distance_segment(start, d) < excl.r_min)
    throw DomainError("segment_transport: segment meets the origin exclusion");
  Quaternion q = Quaternion::identity();
  const double h = 1.0 / steps;
  for (int s = 0; s < steps; ++s) {
    const Vec3 mid = start + ((s + 0.5) * h) * d;
    q = q * exp_imaginary(h * potential_along(mid, d));
  }
  return q;
}

Quaternion segment_transport_exact(const Vec3& start, const Vec3& d, const Exclusion& excl) {
  if (origin_distance_segment(start, d) < excl.r_min)
    throw DomainError("segment_transport_exact: segment meets the origin exclusion");
  // Along y = start + s d the potential is (1/2)(d x start) / |y|^2; the
  // integral of 1/|y|^2 is psi/kappa with psi the angle subtended.
  const Vec3 axis = cross(d, start);
  const double kappa = norm(axis);
  if (kappa == 0.0) return Quaternion::identity();
  const Vec3 end = start + d;
  const double psi = std::atan2(norm(cross(start, end)), dot(start, end));
  return exp_imaginary((0.5 * psi / kappa) * axis);
}

Quaternion path_ordered_exp(const Polyline& loop, int steps, const Exclusion& excl) {
  if (!loop.closed()) throw std::invalid_argument("path_ordered_exp: loop must be closed");
  Quaternion q = Quaternion::identity();
  for (std::size_t k = 0; k < loop.segment_count(); ++k) {
    const auto [p, d] = loop.segment(k);
    q = q * segment_transport(p, d, steps, excl);
  }
  return q;
}

Quaternion quaternion_multiplier(const Vec3& x, const Vec3& a, const Vec3& b, double hbar,
                                 const Exclusion& excl) {
  const auto cfg = MonopoleConfig::quantized(1, hbar, excl);
  const double phase = flux_triangle({x, a, b}, cfg) / hbar;
  const Quaternion j = j_field(x, excl);
  return Quaternion(std::cos(phase), 0.0, 0.0, 0.0) - std::sin(phase) * j;
}

std::complex<double> complex_multiplier(const Vec3& x, const Vec3& a, const Vec3& b,
                                        const MonopoleConfig& cfg) {
  return std::polar(1.0, -flux_triangle({x, a, b}, cfg) / cfg.hbar());
}

double cocycle_residual(const Vec3& x, const Vec3& a, const Vec3& b, const Vec3& c,
                        const MonopoleConfig& cfg) {
  const C lhs = complex_multiplier(x, a, b, cfg) * complex_multiplier(x, a + b, c, cfg);
  const C rhs = complex_multiplier(x + a, b, c, cfg) * complex_multiplier(x, a, b + c, cfg);
  return std::abs(lhs - rhs);
}

}  // namespace monopole

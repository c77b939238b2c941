#include "monopole/kernel.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "monopole/bundle.hpp"
#include "monopole/errors.hpp"

namespace monopole {

namespace {

using M3 = Eigen::Matrix3d;
using V3 = Eigen::Vector3d;

M3 to_eigen(const Matrix3& m) {
  M3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return out;
}

V3 to_eigen(const Vec3& v) { return {v[0], v[1], v[2]}; }
Vec3 from_eigen(const V3& v) { return {v(0), v(1), v(2)}; }

constexpr double kSingularTol = 1e-12;

void require_regular(const M3& alpha) {
  const double det = (alpha * (M3::Identity() - alpha)).determinant();
  if (!(std::abs(det) > kSingularTol))
    throw DomainError("kernel: det(alpha (I - alpha)) vanishes; the singular kernels are distributions");
}

}  // namespace

Matrix3 scalar_matrix(double s) { return diagonal_matrix({s, s, s}); }

Matrix3 diagonal_matrix(const Vec3& d) {
  Matrix3 m{};
  for (int i = 0; i < 3; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = d[i];
  return m;
}

std::array<Vec3, 3> bar_triangle(const Matrix3& alpha_, const Vec3& x, const Vec3& xp, const Vec3& xpp) {
  const M3 a = to_eigen(alpha_);
  require_regular(a);
  const M3 b = M3::Identity() - a;
  // Unknowns (xb, xb', xb'').
  Eigen::Matrix<double, 9, 9> A = Eigen::Matrix<double, 9, 9>::Zero();
  Eigen::Matrix<double, 9, 1> rhs;
  A.block<3, 3>(0, 0) = b;
  A.block<3, 3>(0, 6) = a;
  A.block<3, 3>(3, 0) = b;
  A.block<3, 3>(3, 3) = a;
  A.block<3, 3>(6, 3) = b;
  A.block<3, 3>(6, 6) = a;
  rhs << to_eigen(x), to_eigen(xp), to_eigen(xpp);
  const Eigen::Matrix<double, 9, 1> sol = A.partialPivLu().solve(rhs);
  return {from_eigen(sol.segment<3>(0)), from_eigen(sol.segment<3>(3)), from_eigen(sol.segment<3>(6))};
}

std::complex<double> kernel_magnetic(const Matrix3& alpha_, const Vec3& x, const Vec3& xp, const Vec3& xpp,
                                     const MonopoleConfig& cfg) {
  const M3 a = to_eigen(alpha_);
  require_regular(a);
  const M3 b_inv = (M3::Identity() - a).inverse();
  const V3 dx2 = to_eigen(xpp) - to_eigen(x);
  const V3 base = to_eigen(xp) - a * b_inv * dx2;
  const V3 ea = b_inv * dx2;
  const V3 eb = a.inverse() * (to_eigen(x) - to_eigen(xp));
  const Triangle tri{from_eigen(base), from_eigen(ea), from_eigen(eb)};
  if (!is_admissible(tri, cfg.exclusion())) throw DomainError("kernel_magnetic: triangle meets the origin exclusion");
  return complex_multiplier(tri.base, tri.a, tri.b, cfg);
}

std::complex<double> kernel_magnetic_bar(const Matrix3& alpha, const Vec3& x, const Vec3& xp, const Vec3& xpp,
                                         const MonopoleConfig& cfg) {
  const auto v = bar_triangle(alpha, x, xp, xpp);
  const Triangle tri = Triangle::from_vertices(v[0], v[1], v[2]);
  if (!is_admissible(tri, cfg.exclusion())) throw DomainError("kernel_magnetic_bar: triangle meets the origin exclusion");
  return std::polar(1.0, -flux_triangle(tri, cfg) / cfg.hbar());
}

std::complex<double> kernel_full(const Matrix3& alpha_, const PhasePoint& out, const PhasePoint& left,
                                 const PhasePoint& right, const MonopoleConfig& cfg) {
  const M3 a = to_eigen(alpha_);
  require_regular(a);
  const M3 b = M3::Identity() - a;
  const double hbar = cfg.hbar();
  const double det = std::abs((a * b).determinant());
  const double norm = 1.0 / (std::pow(2.0 * std::numbers::pi * hbar, 6) * det);
  const V3 x = to_eigen(out.x);
  const V3 p = to_eigen(out.p);
  const double phase = (p - to_eigen(right.p)).dot(a.inverse() * (x - to_eigen(left.x))) -
                       (p - to_eigen(left.p)).dot(b.inverse() * (x - to_eigen(right.x)));
  return norm * std::polar(1.0, phase / hbar) * kernel_magnetic(alpha_, out.x, left.x, right.x, cfg);
}

}  // namespace monopole

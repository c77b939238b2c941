#pragma once

#include <array>
#include <complex>

#include "monopole/config.hpp"
#include "monopole/geometry.hpp"
#include "monopole/vec3.hpp"

namespace monopole {

/// Vertices of the triangle whose points are tied to (x, x', x'') by
///   x = alpha xb'' + (I - alpha) xb,  x' = alpha xb' + (I - alpha) xb,
///   x'' = alpha xb'' + (I - alpha) xb',
/// solved as one 9x9 linear system. Returned as {xb, xb', xb''}.
std::array<Vec3, 3> bar_triangle(const Matrix3& alpha, const Vec3& x, const Vec3& xp, const Vec3& xpp);

/// m(x' - alpha (I-alpha)^{-1}(x''-x); (I-alpha)^{-1}(x''-x), alpha^{-1}(x-x')).
std::complex<double> kernel_magnetic(const Matrix3& alpha, const Vec3& x, const Vec3& xp, const Vec3& xpp,
                                     const MonopoleConfig& cfg);

/// exp{-(i/hbar) flux} through the triangle xb -> xb' -> xb''.
std::complex<double> kernel_magnetic_bar(const Matrix3& alpha, const Vec3& x, const Vec3& xp, const Vec3& xpp,
                                         const MonopoleConfig& cfg);

struct PhasePoint {
  Vec3 x;
  Vec3 p;
};

/// Full kernel K_alpha * K_alpha^magn at output point `out` with arguments
/// `left` = (x', p') and `right` = (x'', p'').
std::complex<double> kernel_full(const Matrix3& alpha, const PhasePoint& out, const PhasePoint& left,
                                 const PhasePoint& right, const MonopoleConfig& cfg);

Matrix3 scalar_matrix(double s);
Matrix3 diagonal_matrix(const Vec3& d);

}  // namespace monopole

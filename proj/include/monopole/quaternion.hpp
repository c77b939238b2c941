#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <ostream>

#include "monopole/vec3.hpp"

namespace monopole {

/// 2x2 complex matrix, row-major.
using Mat2c = std::array<std::complex<double>, 4>;

/// Real quaternion w + q1 e1 + q2 e2 + q3 e3 with e_j identified with -i sigma_j,
/// so that e1 e2 = e3 (and cyclic), e_j^2 = -1.
struct Quaternion {
  double w = 0.0;
  Vec3 v{};

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double q1, double q2, double q3) : w(w_), v{q1, q2, q3} {}
  constexpr Quaternion(double w_, const Vec3& v_) : w(w_), v(v_) {}

  static constexpr Quaternion identity() { return {1.0, 0.0, 0.0, 0.0}; }
  /// Basis unit e_j for j = 1, 2, 3.
  static constexpr Quaternion unit(int j) {
    Quaternion q;
    q.v[j - 1] = 1.0;
    return q;
  }
  static constexpr Quaternion imaginary(const Vec3& v) { return {0.0, v}; }

  constexpr Quaternion conj() const { return {w, -v}; }
  double norm() const { return std::sqrt(w * w + norm2(v)); }
  Quaternion inverse() const;

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w;
    v += o.v;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w;
    v -= o.v;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s;
    v *= s;
    return *this;
  }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.v}; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - dot(a.v, b.v), a.w * b.v + b.w * a.v + cross(a.v, b.v)};
}

inline double distance(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

/// exp of an imaginary quaternion: cos|v| + sin|v| v/|v|.
Quaternion exp_imaginary(const Vec3& v);

/// w I + sum_j q_j (-i sigma_j).
Mat2c to_su2(const Quaternion& q);
/// Inverse of to_su2 for matrices of the form [[alpha, beta], [-conj(beta), conj(alpha)]]
/// (times a real scale); the antihermitian-traceless residue is discarded.
Quaternion from_su2(const Mat2c& m);

Mat2c matmul(const Mat2c& a, const Mat2c& b);

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '[' << q.w << "; " << q.v[0] << ", " << q.v[1] << ", " << q.v[2] << ']';
}

}  // namespace monopole

#pragma once

#include <array>
#include <cmath>
#include <ostream>

namespace monopole {

/// Cartesian vector in R^3.
struct Vec3 {
  std::array<double, 3> c{0.0, 0.0, 0.0};

  constexpr Vec3() = default;
  constexpr Vec3(double x, double y, double z) : c{x, y, z} {}

  constexpr double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  constexpr double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

  constexpr double x() const { return c[0]; }
  constexpr double y() const { return c[1]; }
  constexpr double z() const { return c[2]; }

  constexpr Vec3& operator+=(const Vec3& o) {
    for (int i = 0; i < 3; ++i) (*this)[i] += o[i];
    return *this;
  }
  constexpr Vec3& operator-=(const Vec3& o) {
    for (int i = 0; i < 3; ++i) (*this)[i] -= o[i];
    return *this;
  }
  constexpr Vec3& operator*=(double s) {
    for (auto& v : c) v *= s;
    return *this;
  }

  bool is_finite() const {
    return std::isfinite(c[0]) && std::isfinite(c[1]) && std::isfinite(c[2]);
  }
};

constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
constexpr Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }
constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
constexpr Vec3 operator/(Vec3 a, double s) { return a *= (1.0 / s); }

constexpr double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

inline double norm2(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

/// Levi-Civita symbol on indices 0..2.
constexpr int levi_civita(int i, int j, int k) {
  return (i - j) * (j - k) * (k - i) / 2;
}

inline std::ostream& operator<<(std::ostream& os, const Vec3& v) {
  return os << '(' << v[0] << ", " << v[1] << ", " << v[2] << ')';
}

}  // namespace monopole

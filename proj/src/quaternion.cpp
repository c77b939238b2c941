#include "monopole/quaternion.hpp"

#include <stdexcept>

namespace monopole {

Quaternion Quaternion::inverse() const {
  const double n2 = w * w + norm2(v);
  if (n2 == 0.0) throw std::domain_error("inverse of the zero quaternion");
  return (1.0 / n2) * conj();
}

Quaternion exp_imaginary(const Vec3& v) {
  const double a = norm(v);
  if (a < 1e-300) return Quaternion::identity();
  // sin(a)/a is well conditioned away from 0; below 1e-8 use its series.
  const double sinc = a < 1e-8 ? 1.0 - a * a / 6.0 : std::sin(a) / a;
  return {std::cos(a), sinc * v};
}

Mat2c to_su2(const Quaternion& q) {
  using C = std::complex<double>;
  // -i sigma_1 = [[0,-i],[-i,0]], -i sigma_2 = [[0,-1],[1,0]], -i sigma_3 = [[-i,0],[0,i]]
  return {C(q.w, -q.v[2]), C(-q.v[1], -q.v[0]), C(q.v[1], -q.v[0]), C(q.w, q.v[2])};
}

Quaternion from_su2(const Mat2c& m) {
  // Average the two representations of each component.
  const std::complex<double> alpha = 0.5 * (m[0] + std::conj(m[3]));
  const std::complex<double> beta = 0.5 * (m[1] - std::conj(m[2]));
  return {alpha.real(), -beta.imag(), -beta.real(), -alpha.imag()};
}

Mat2c matmul(const Mat2c& a, const Mat2c& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

}  // namespace monopole

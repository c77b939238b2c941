#include "monopole/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace monopole {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Vec3 Rng::unit_vector() {
  const double z = uniform(-1.0, 1.0);
  const double phi = uniform(-std::numbers::pi, std::numbers::pi);
  const double s = std::sqrt(1.0 - z * z);
  return {s * std::cos(phi), s * std::sin(phi), z};
}

Vec3 Rng::in_shell(double r_lo, double r_hi) { return uniform(r_lo, r_hi) * unit_vector(); }

namespace {

constexpr int kMaxAttempts = 100000;

double string_distance_triangle(Chart chart, const Triangle& tri) {
  if (string_pierces(chart, tri)) return 0.0;
  const auto v = tri.vertices();
  double d = string_distance_segment(chart, v[0], v[1] - v[0]);
  d = std::min(d, string_distance_segment(chart, v[1], v[2] - v[1]));
  return std::min(d, string_distance_segment(chart, v[2], v[0] - v[2]));
}

}  // namespace

Triangle random_triangle(Rng& rng, double margin, double r_lo, double r_hi) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const Triangle tri =
        Triangle::from_vertices(rng.in_shell(r_lo, r_hi), rng.in_shell(r_lo, r_hi), rng.in_shell(r_lo, r_hi));
    if (origin_distance(tri) >= margin) return tri;
  }
  throw std::runtime_error("random_triangle: rejection sampling did not converge");
}

Triangle random_admissible_triangle(Rng& rng, Chart chart, double margin, double rel_clearance) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const Triangle tri = random_triangle(rng, margin);
    const auto v = tri.vertices();
    double longest = 0.0;
    double edge_origin = 1e300;
    for (int k = 0; k < 3; ++k) {
      const Vec3 d = v[static_cast<std::size_t>((k + 1) % 3)] - v[static_cast<std::size_t>(k)];
      longest = std::max(longest, norm(d));
      edge_origin = std::min(edge_origin, origin_distance_segment(v[static_cast<std::size_t>(k)], d));
    }
    const double clearance = std::max(margin, rel_clearance * longest);
    if (string_distance_triangle(chart, tri) >= clearance && edge_origin >= clearance) return tri;
  }
  throw std::runtime_error("random_admissible_triangle: rejection sampling did not converge");
}

std::array<Vec3, 4> random_tetrahedron(Rng& rng, bool enclose, double margin) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::array<Vec3, 4> v{rng.in_shell(0.5, 3.0), rng.in_shell(0.5, 3.0), rng.in_shell(0.5, 3.0),
                          rng.in_shell(0.5, 3.0)};
    const double vol = dot(v[1] - v[0], cross(v[2] - v[0], v[3] - v[0]));
    if (std::abs(vol) < 1e-3) continue;
    // Barycentric coordinates of the origin.
    bool inside = true;
    bool far = true;
    for (int k = 0; k < 4; ++k) {
      std::array<Vec3, 4> w = v;
      w[static_cast<std::size_t>(k)] = Vec3{};
      const double lambda = dot(w[1] - w[0], cross(w[2] - w[0], w[3] - w[0])) / vol;
      if (lambda <= 0.0) inside = false;
      const auto& a = v[static_cast<std::size_t>((k + 1) % 4)];
      const auto& b = v[static_cast<std::size_t>((k + 2) % 4)];
      const auto& c = v[static_cast<std::size_t>((k + 3) % 4)];
      if (origin_distance(Triangle::from_vertices(a, b, c)) < margin) far = false;
    }
    if (inside == enclose && far) return v;
  }
  throw std::runtime_error("random_tetrahedron: rejection sampling did not converge");
}

Jet random_polynomial_jet(Rng& rng, int vars, int degree, int order, std::vector<double> base,
                          bool real) {
  Jet j(vars, order, std::move(base));
  const auto& layout = j.layout();
  const std::size_t n = layout.prefix(degree);
  for (std::size_t k = 0; k < n; ++k) {
    const double re = rng.normal();
    const double im = real ? 0.0 : rng.normal();
    j.coeffs()[k] = {re, im};
  }
  return j;
}

}  // namespace monopole

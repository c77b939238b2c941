#pragma once

#include <array>
#include <vector>

#include "monopole/config.hpp"
#include "monopole/vec3.hpp"

namespace monopole {

/// Wu-Yang chart. Plus is singular on the negative z half-axis, Minus on
/// the positive one.
enum class Chart { Plus, Minus };

const char* chart_name(Chart chart);

using Matrix3 = std::array<std::array<double, 3>, 3>;

/// Oriented plane triangle with vertices x, x+a, x+a+b, traversed in that
/// order.
struct Triangle {
  Vec3 base;
  Vec3 a;
  Vec3 b;

  std::array<Vec3, 3> vertices() const { return {base, base + a, base + a + b}; }

  /// Same vertex set, opposite orientation.
  Triangle reversed() const { return {base + a + b, -b, -a}; }

  static Triangle from_vertices(const Vec3& p0, const Vec3& p1, const Vec3& p2) {
    return {p0, p1 - p0, p2 - p1};
  }
};

class Polyline {
 public:
  Polyline(std::vector<Vec3> vertices, bool closed);

  const std::vector<Vec3>& vertices() const { return vertices_; }
  bool closed() const { return closed_; }
  std::size_t segment_count() const;
  /// Segment k as (start, displacement).
  std::pair<Vec3, Vec3> segment(std::size_t k) const;

  Polyline reversed() const;

  static Polyline triangle_boundary(const Triangle& tri);

 private:
  std::vector<Vec3> vertices_;
  bool closed_;
};

// Distances used by the admissibility predicates.
double distance_to_segment(const Vec3& p, const Vec3& start, const Vec3& d);
double origin_distance(const Triangle& tri);
double origin_distance_segment(const Vec3& start, const Vec3& d);
/// Distance from a point to the closed half-axis where the chart is singular.
double string_distance(Chart chart, const Vec3& p);
double string_distance_segment(Chart chart, const Vec3& start, const Vec3& d);
/// True when the chart's half-axis passes through the closed triangle.
bool string_pierces(Chart chart, const Triangle& tri);

bool is_admissible(const Triangle& tri, const Exclusion& excl);
bool is_admissible(Chart chart, const Polyline& path, const Exclusion& excl);

/// beta_ij(x) = eg * eps_ijk x^k / |x|^3.
Matrix3 beta_matrix(const Vec3& x, const MonopoleConfig& cfg);

/// Signed solid angle subtended at the origin. Positive when the oriented
/// normal a x b points away from the origin.
double solid_angle(const Triangle& tri, const Exclusion& excl = {});

/// Flux of beta through the triangle, eg * solid_angle.
double flux_triangle(const Triangle& tri, const MonopoleConfig& cfg);

/// Iterated Gauss quadrature of the natural parametrization
/// int_0^1 dt1 int_0^t1 dt2 a.beta(x + t1 a + t2 b).b ; ground truth for the
/// sign convention of solid_angle.
double flux_oracle(const Triangle& tri, const MonopoleConfig& cfg, int order);

/// e*A for the given chart, Cartesian components.
Vec3 wu_yang_potential(Chart chart, const Vec3& x, const MonopoleConfig& cfg);

/// Gauss-Legendre line integral of e*A along the path, `nodes` per segment.
double circulation(Chart chart, const Polyline& path, const MonopoleConfig& cfg,
                   int nodes);

}  // namespace monopole

#include "monopole/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "monopole/errors.hpp"
#include "monopole/quadrature.hpp"

namespace monopole {

MonopoleConfig MonopoleConfig::quantized(int n, double hbar, Exclusion excl) {
  if (!(hbar > 0.0)) throw std::invalid_argument("hbar must be positive");
  return MonopoleConfig(n, 0.5 * n * hbar, hbar, excl);
}

MonopoleConfig MonopoleConfig::unquantized(double eg, double hbar, Exclusion excl) {
  if (!(hbar > 0.0)) throw std::invalid_argument("hbar must be positive");
  if (!std::isfinite(eg)) throw std::invalid_argument("eg must be finite");
  return MonopoleConfig(std::nullopt, eg, hbar, excl);
}

const char* chart_name(Chart chart) { return chart == Chart::Plus ? "plus" : "minus"; }

Polyline::Polyline(std::vector<Vec3> vertices, bool closed)
    : vertices_(std::move(vertices)), closed_(closed) {
  if (vertices_.size() < 2) throw std::invalid_argument("polyline needs at least 2 vertices");
  for (const auto& v : vertices_)
    if (!v.is_finite()) throw std::invalid_argument("polyline vertex is not finite");
}

std::size_t Polyline::segment_count() const {
  return closed_ ? vertices_.size() : vertices_.size() - 1;
}

std::pair<Vec3, Vec3> Polyline::segment(std::size_t k) const {
  const Vec3& p = vertices_[k];
  const Vec3& q = vertices_[(k + 1) % vertices_.size()];
  return {p, q - p};
}

Polyline Polyline::reversed() const {
  std::vector<Vec3> v(vertices_.rbegin(), vertices_.rend());
  if (closed_) std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());  // keep the start vertex
  return Polyline(std::move(v), closed_);
}

Polyline Polyline::triangle_boundary(const Triangle& tri) {
  const auto v = tri.vertices();
  return Polyline({v[0], v[1], v[2]}, true);
}

double distance_to_segment(const Vec3& p, const Vec3& start, const Vec3& d) {
  const double dd = norm2(d);
  double s = dd > 0.0 ? dot(p - start, d) / dd : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  return norm(p - (start + s * d));
}

double origin_distance_segment(const Vec3& start, const Vec3& d) {
  return distance_to_segment(Vec3{}, start, d);
}

namespace {

// Closest point of a (possibly degenerate) triangle to p.
double point_triangle_distance(const Vec3& p, const Vec3& A, const Vec3& B, const Vec3& C) {
  const Vec3 ab = B - A, ac = C - A, ap = p - A;
  const Vec3 n = cross(ab, ac);
  const double nn = norm2(n);
  double best = std::min({distance_to_segment(p, A, ab), distance_to_segment(p, B, C - B),
                          distance_to_segment(p, C, A - C)});
  if (nn > 1e-300) {
    // barycentric coordinates of the projection
    const Vec3 q = p - (dot(ap, n) / nn) * n;
    const Vec3 aq = q - A;
    const double d00 = dot(ab, ab), d01 = dot(ab, ac), d11 = dot(ac, ac);
    const double d20 = dot(aq, ab), d21 = dot(aq, ac);
    const double denom = d00 * d11 - d01 * d01;
    const double v = (d11 * d20 - d01 * d21) / denom;
    const double w = (d00 * d21 - d01 * d20) / denom;
    if (v >= 0.0 && w >= 0.0 && v + w <= 1.0) best = std::min(best, std::abs(dot(ap, n)) / std::sqrt(nn));
  }
  return best;
}

// Minimizes a convex function on [0, 1] by golden-section search.
template <class F>
double minimize_convex(F&& f) {
  constexpr double g = 0.6180339887498949;
  double lo = 0.0, hi = 1.0;
  double m1 = hi - g * (hi - lo), m2 = lo + g * (hi - lo);
  double f1 = f(m1), f2 = f(m2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      hi = m2;
      m2 = m1;
      f2 = f1;
      m1 = hi - g * (hi - lo);
      f1 = f(m1);
    } else {
      lo = m1;
      m1 = m2;
      f1 = f2;
      m2 = lo + g * (hi - lo);
      f2 = f(m2);
    }
  }
  return std::min({f(0.0), f(1.0), f1, f2});
}

double string_sign(Chart chart) { return chart == Chart::Plus ? -1.0 : 1.0; }

}  // namespace

double origin_distance(const Triangle& tri) {
  const auto v = tri.vertices();
  return point_triangle_distance(Vec3{}, v[0], v[1], v[2]);
}

double string_distance(Chart chart, const Vec3& p) {
  // The string is {(0,0,s) : s*sign >= 0}.
  const double along = p.z() * string_sign(chart);
  if (along >= 0.0) return std::hypot(p.x(), p.y());
  return norm(p);
}

double string_distance_segment(Chart chart, const Vec3& start, const Vec3& d) {
  return minimize_convex([&](double s) { return string_distance(chart, start + s * d); });
}

bool string_pierces(Chart chart, const Triangle& tri) {
  // Moller-Trumbore with the ray from the origin along the string direction.
  const Vec3 dir{0.0, 0.0, string_sign(chart)};
  const auto v = tri.vertices();
  const Vec3 e1 = v[1] - v[0], e2 = v[2] - v[0];
  const Vec3 h = cross(dir, e2);
  const double det = dot(e1, h);
  if (std::abs(det) < 1e-300) return false;
  const Vec3 s = Vec3{} - v[0];
  const double u = dot(s, h) / det;
  if (u < 0.0 || u > 1.0) return false;
  const Vec3 q = cross(s, e1);
  const double w = dot(dir, q) / det;
  if (w < 0.0 || u + w > 1.0) return false;
  return dot(e2, q) / det >= 0.0;
}

bool is_admissible(const Triangle& tri, const Exclusion& excl) {
  return tri.base.is_finite() && tri.a.is_finite() && tri.b.is_finite()
      && origin_distance(tri) >= excl.r_min;
}

bool is_admissible(Chart chart, const Polyline& path, const Exclusion& excl) {
  for (std::size_t k = 0; k < path.segment_count(); ++k) {
    const auto [p, d] = path.segment(k);
    if (origin_distance_segment(p, d) < excl.r_min) return false;
    if (string_distance_segment(chart, p, d) < excl.string_eps) return false;
  }
  return true;
}

Matrix3 beta_matrix(const Vec3& x, const MonopoleConfig& cfg) {
  const double r = norm(x);
  if (!(r >= cfg.exclusion().r_min))
    throw DomainError(fmt::format("beta_matrix: |x| = {} inside the origin exclusion", r));
  const double s = cfg.eg() / (r * r * r);
  Matrix3 beta{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double v = 0.0;
      for (int k = 0; k < 3; ++k) v += levi_civita(i, j, k) * x[k];
      beta[i][j] = s * v;
    }
  return beta;
}

double solid_angle(const Triangle& tri, const Exclusion& excl) {
  if (!is_admissible(tri, excl))
    throw DomainError("solid_angle: triangle meets the origin exclusion ball");
  const auto v = tri.vertices();
  const double r1 = norm(v[0]), r2 = norm(v[1]), r3 = norm(v[2]);
  const double num = dot(v[0], cross(v[1], v[2]));
  const double den = r1 * r2 * r3 + dot(v[0], v[1]) * r3 + dot(v[0], v[2]) * r2
                   + dot(v[1], v[2]) * r1;
  if (num == 0.0) return 0.0;
  return 2.0 * std::atan2(num, den);
}

double flux_triangle(const Triangle& tri, const MonopoleConfig& cfg) {
  return cfg.eg() * solid_angle(tri, cfg.exclusion());
}

double flux_oracle(const Triangle& tri, const MonopoleConfig& cfg, int order) {
  if (order < 2) throw std::invalid_argument("flux_oracle: order must be >= 2");
  if (!is_admissible(tri, cfg.exclusion())) throw DomainError("flux_oracle: triangle meets the origin exclusion");
  const auto& rule = gauss_legendre(order);
  const Vec3 axb = cross(tri.a, tri.b);
  const double rmin = cfg.exclusion().r_min;
  // t2 = t1 * s maps the inner interval to [0, 1] with Jacobian t1.
  double total = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t1 = rule.nodes[i];
    double inner = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      const Vec3 y = tri.base + t1 * tri.a + (t1 * rule.nodes[j]) * tri.b;
      const double r = norm(y);
      if (!(r >= rmin)) throw DomainError("flux_oracle: quadrature node inside the origin exclusion");
      // a^i beta_ij b^j = eg (a x b).y / |y|^3
      inner += rule.weights[j] * dot(axb, y) / (r * r * r);
    }
    total += rule.weights[i] * t1 * inner;
  }
  return cfg.eg() * total;
}

Vec3 wu_yang_potential(Chart chart, const Vec3& x, const MonopoleConfig& cfg) {
  const double r = norm(x);
  const auto& excl = cfg.exclusion();
  if (!(r >= excl.r_min)) throw DomainError("wu_yang_potential: point inside the origin exclusion");
  const double rho2 = x.x() * x.x() + x.y() * x.y();
  if (x.z() * string_sign(chart) > 0.0 && rho2 < excl.string_eps * excl.string_eps)
    throw DomainError(fmt::format("wu_yang_potential: point too close to the {} chart string",
                                  chart_name(chart)));
  const Vec3 ephi_rho{-x.y(), x.x(), 0.0};  // rho * e_phi
  const double eg = cfg.eg();
  if (chart == Chart::Plus) {
    // eg tan(theta/2)/r e_phi = eg (-y, x, 0) / (r (r + z))
    const double f = x.z() >= 0.0 ? 1.0 / (r * (r + x.z())) : (r - x.z()) / (r * rho2);
    return (eg * f) * ephi_rho;
  }
  // -eg cot(theta/2)/r e_phi = -eg (-y, x, 0) / (r (r - z))
  const double f = x.z() <= 0.0 ? 1.0 / (r * (r - x.z())) : (r + x.z()) / (r * rho2);
  return (-eg * f) * ephi_rho;
}

double circulation(Chart chart, const Polyline& path, const MonopoleConfig& cfg, int nodes) {
  if (!is_admissible(chart, path, cfg.exclusion()))
    throw DomainError(fmt::format("circulation: path leaves the domain of the {} chart",
                                  chart_name(chart)));
  const auto& rule = gauss_legendre(nodes);
  double total = 0.0;
  for (std::size_t k = 0; k < path.segment_count(); ++k) {
    const auto [p, d] = path.segment(k);
    double seg = 0.0;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q)
      seg += rule.weights[q] * dot(wu_yang_potential(chart, p + rule.nodes[q] * d, cfg), d);
    total += seg;
  }
  return total;
}

}  // namespace monopole

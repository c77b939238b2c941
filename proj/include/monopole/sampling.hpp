#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "monopole/config.hpp"
#include "monopole/geometry.hpp"
#include "monopole/jet.hpp"
#include "monopole/vec3.hpp"

namespace monopole {

std::uint64_t splitmix64(std::uint64_t x);

/// Random stream. stream(root, i) gives trial i its own generator, so adding
/// trials never reshuffles earlier ones.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}
  static Rng stream(std::uint64_t root, std::uint64_t index) {
    return Rng(splitmix64(root) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
  }

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  double normal() { return std::normal_distribution<double>()(engine_); }
  Vec3 unit_vector();
  /// Uniform direction, radius uniform in [r_lo, r_hi].
  Vec3 in_shell(double r_lo, double r_hi);
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Triangle with vertices in the shell 0.5 <= |v| <= 3, at least `margin`
/// from the origin and not pierced by the chart's string. Its edges also keep
/// rel_clearance * (longest edge) away from the origin and the string, which
/// is what fixed-order Gauss quadrature of the potential along them needs.
Triangle random_admissible_triangle(Rng& rng, Chart chart, double margin = 0.1,
                                    double rel_clearance = 0.1);

/// Triangle with all vertices in the shell and at least `margin` from the
/// origin; no chart condition.
Triangle random_triangle(Rng& rng, double margin = 0.1, double r_lo = 0.5, double r_hi = 3.0);

/// Vertices v0..v3 of a tetrahedron with 0.5 <= |v| <= 3 whose faces keep
/// `margin` from the origin; the origin is strictly inside iff `enclose`.
std::array<Vec3, 4> random_tetrahedron(Rng& rng, bool enclose, double margin = 0.05);

/// Base point with r_lo <= |x0| <= r_hi.
inline Vec3 random_base_point(Rng& rng, double r_lo = 0.5, double r_hi = 2.0) {
  return rng.in_shell(r_lo, r_hi);
}

/// Random polynomial of total degree <= `degree` in `vars` variables, as a
/// jet of the given order at `base` (coefficients standard normal, complex
/// unless `real`).
Jet random_polynomial_jet(Rng& rng, int vars, int degree, int order, std::vector<double> base,
                          bool real = false);

}  // namespace monopole

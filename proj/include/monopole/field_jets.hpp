#pragma once

#include <array>

#include "monopole/config.hpp"
#include "monopole/geometry.hpp"
#include "monopole/jet.hpp"
#include "monopole/vec3.hpp"

namespace monopole {

using JetVec3 = std::array<Jet, 3>;
using JetMatrix3 = std::array<JetVec3, 3>;

/// Coordinate jets x^1, x^2, x^3 at x0.
JetVec3 coordinate_jets(const Vec3& x0, int order);

/// |x|^s at x0.
Jet norm_power_jet(const Vec3& x0, double s, int order, const Exclusion& excl = {});

/// Jets of beta_ij around x0; degree-0 parts equal beta_matrix(x0).
JetMatrix3 beta_jet(const Vec3& x0, const MonopoleConfig& cfg, int order);

/// Jets of e*A for the chart.
JetVec3 wu_yang_potential_jet(Chart chart, const Vec3& x0, const MonopoleConfig& cfg, int order);

/// c[k][j] with A_k = sum_j c[k][j] e_j, the su(2) potential of bundle.hpp.
JetMatrix3 su2_potential_jet(const Vec3& x0, int order, const Exclusion& excl = {});

}  // namespace monopole

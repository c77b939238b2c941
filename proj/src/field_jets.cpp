#include "monopole/field_jets.hpp"

#include "monopole/errors.hpp"

namespace monopole {

namespace {

std::vector<double> base_of(const Vec3& x0) { return {x0[0], x0[1], x0[2]}; }

Jet zero_jet(const Vec3& x0, int order) { return Jet(3, order, base_of(x0)); }

void require_off_origin(const Vec3& x0, const Exclusion& excl, const char* who) {
  if (norm(x0) < excl.r_min) throw DomainError(std::string(who) + ": point inside the origin exclusion ball");
}

}  // namespace

JetVec3 coordinate_jets(const Vec3& x0, int order) {
  const auto b = base_of(x0);
  return {Jet::variable(3, order, b, 0), Jet::variable(3, order, b, 1),
          Jet::variable(3, order, b, 2)};
}

Jet norm_power_jet(const Vec3& x0, double s, int order, const Exclusion& excl) {
  require_off_origin(x0, excl, "norm_power_jet");
  const auto x = coordinate_jets(x0, order);
  return pow(x[0] * x[0] + x[1] * x[1] + x[2] * x[2], s / 2.0);
}

JetMatrix3 beta_jet(const Vec3& x0, const MonopoleConfig& cfg, int order) {
  require_off_origin(x0, cfg.exclusion(), "beta_jet");
  const auto x = coordinate_jets(x0, order);
  const Jet inv3 = cfg.eg() * norm_power_jet(x0, -3.0, order, cfg.exclusion());
  JetMatrix3 beta{{{zero_jet(x0, order), zero_jet(x0, order), zero_jet(x0, order)},
                   {zero_jet(x0, order), zero_jet(x0, order), zero_jet(x0, order)},
                   {zero_jet(x0, order), zero_jet(x0, order), zero_jet(x0, order)}}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const int e = levi_civita(i, j, k);
        if (e != 0) beta[i][j].add_product(inv3, x[k], static_cast<double>(e));
      }
  return beta;
}

JetVec3 wu_yang_potential_jet(Chart chart, const Vec3& x0, const MonopoleConfig& cfg, int order) {
  const auto& excl = cfg.exclusion();
  require_off_origin(x0, excl, "wu_yang_potential_jet");
  if (string_distance(chart, x0) < excl.string_eps)
    throw DomainError("wu_yang_potential_jet: point on the chart's string");
  const auto x = coordinate_jets(x0, order);
  const Jet r = norm_power_jet(x0, 1.0, order, excl);
  // e*A_+ = eg (-y, x, 0) / (r (r + z)),  e*A_- = -eg (-y, x, 0) / (r (r - z)).
  const double sign = chart == Chart::Plus ? 1.0 : -1.0;
  const Jet denom = r * (r + sign * x[2]);
  const Jet f = (sign * cfg.eg()) * pow(denom, -1.0);
  return {-1.0 * (f * x[1]), f * x[0], zero_jet(x0, order)};
}

JetMatrix3 su2_potential_jet(const Vec3& x0, int order, const Exclusion& excl) {
  const auto x = coordinate_jets(x0, order);
  const Jet inv2 = 0.5 * norm_power_jet(x0, -2.0, order, excl);
  JetMatrix3 c{{{zero_jet(x0, order), zero_jet(x0, order), zero_jet(x0, order)},
                {zero_jet(x0, order), zero_jet(x0, order), zero_jet(x0, order)},
                {zero_jet(x0, order), zero_jet(x0, order), zero_jet(x0, order)}}};
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i) {
        const int e = levi_civita(i, j, k);
        if (e != 0) c[k][j].add_product(inv2, x[i], static_cast<double>(e));
      }
  return c;
}

}  // namespace monopole

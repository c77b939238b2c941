#pragma once

#include "monopole/config.hpp"
#include "monopole/field_jets.hpp"
#include "monopole/vec3.hpp"
#include "monopole/wpoly.hpp"

namespace monopole {

/// Inputs shared by the exponent constructions. `jet_order` is the order of
/// the beta jets; coefficients of grade k come out at order jet_order - (k-1).
struct ExponentParams {
  Vec3 x0;
  int order = 3;  // highest hbar grade K, 1..3
  int jet_order = 5;
  bool constant_beta = false;  // freeze beta at x0 (drops every derivative term)
};

/// Jets of beta at x0 honoring constant_beta.
JetMatrix3 exponent_beta(const ExponentParams& p, const MonopoleConfig& cfg);

/// i[(1-t) u.v' - t v.u'] at grade 1.
WPoly symplectic_exponent(double t, const ExponentParams& p);

/// int_0^1 dt1 int_0^t1 dt2 (t1 - t)^c (t2 - t)^d.
double ordered_moment(int c, int d, double t);

/// Logarithm of the t-ordered multiplier at the shifted point
/// x0 - hbar t (u + u'), from the Taylor expansion of the flux integral.
WPoly exponent_flux(double t, const ExponentParams& p, const MonopoleConfig& cfg);

struct ZassenhausTerms {
  WPoly c2;
  WPoly c3;
  WPoly c4;
};

/// C'_2, C'_3, C'_4 for X = iu.P, Y = iu'.P from the nested commutators,
/// with [X, Y] = -i hbar u.beta u' and [X, F] = hbar (u.d)F, [Y, F] = hbar (u'.d)F.
ZassenhausTerms zassenhaus_terms(const ExponentParams& p, const MonopoleConfig& cfg);

/// Exponent of m(x, hbar u, hbar u') = -(C'_2 + C'_3 + C'_4), unshifted.
WPoly exponent_zassenhaus(const ExponentParams& p, const MonopoleConfig& cfg);

/// F(x - hbar t (u + u')) re-expanded about x, truncated at max_grade.
WPoly shift(const WPoly& f, double t, int max_grade);

/// shift(exponent_zassenhaus, t) plus the symplectic part; equals exponent_flux(t).
WPoly exponent_zassenhaus_shifted(double t, const ExponentParams& p, const MonopoleConfig& cfg);

}  // namespace monopole

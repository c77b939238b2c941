#pragma once

#include <array>
#include <vector>

#include "monopole/config.hpp"
#include "monopole/exponent.hpp"
#include "monopole/jet.hpp"
#include "monopole/wpoly.hpp"

namespace monopole {

/// Phase-space multi-indices: entries 0..2 differentiate x, 3..5 differentiate p.
struct BidiffTerm {
  int grade;
  MultiIndex left;
  MultiIndex right;
  Jet coeff;  // x-jet at x0
};

/// hbar-graded bidifferential operator sum_k hbar^k sum c(x) d^L f d^R g.
struct StarExpansion {
  double t = 0.5;
  Vec3 x0{};
  int order = 3;
  std::vector<BidiffTerm> terms;  // sorted by (grade, left, right), unique

  const BidiffTerm* find(int grade, const MultiIndex& left, const MultiIndex& right) const;
  /// Largest coefficient difference over the union of terms, on the common
  /// jet order.
  static double max_difference(const StarExpansion& a, const StarExpansion& b);
  /// Sorts, merges duplicates and drops identically zero coefficients.
  void normalize();
};

enum class ExponentRoute { Flux, Zassenhaus };

/// Exponentiates the exponent grade by grade and substitutes
/// u -> -i d_p (left), v -> -i d_x (left), u' -> -i d_p (right), v' -> -i d_x (right).
StarExpansion expansion_from_exponent(const WPoly& exponent, double t, const Vec3& x0, int order);

/// Bidifferential expansion of the t-ordered magnetic star product through hbar^order.
StarExpansion star_expansion(double t, const ExponentParams& p, const MonopoleConfig& cfg,
                             ExponentRoute route = ExponentRoute::Flux);

/// Phase-space point appended to x0 for 6-variable jets.
std::vector<double> phase_base(const Vec3& x0, const Vec3& p0);

/// Graded bilinear application. Inputs are 6-variable HJets at (x0, p0);
/// the output keeps order min(f.order, g.order) - exp.order (also capped by
/// the coefficient jets) so that nesting stays exact.
HJet star_apply(const StarExpansion& exp, const HJet& f, const HJet& g);

/// Max coefficient modulus of (f*g)*h - f*(g*h) for grades 0..exp.order.
std::vector<double> associator_residuals(const StarExpansion& exp, const HJet& f, const HJet& g,
                                         const HJet& h);

/// 6x6 Poisson matrix [[0, I], [-I, beta]] as phase-space jets (p-independent).
using PoissonMatrixJet = std::array<std::array<Jet, 6>, 6>;
PoissonMatrixJet poisson_matrix_jet(const Vec3& x0, const Vec3& p0, const MonopoleConfig& cfg,
                                    int order, bool constant_beta = false);

/// P^{ab} d_a f d_b g.
Jet poisson_bracket(const PoissonMatrixJet& P, const Jet& f, const Jet& g);

}  // namespace monopole

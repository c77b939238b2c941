#pragma once

#include <string>
#include <vector>

#include "monopole/star.hpp"

namespace monopole {

/// Graph with ground vertices F, G and m internal vertices, each carrying a
/// copy of the Poisson bivector. Vertex k sends its left edge (index a of
/// P^{ab}) to `targets[k].first` and its right edge (index b) to `.second`.
struct KGraph {
  static constexpr int F = -1;
  static constexpr int G = -2;

  std::string name;
  std::vector<std::pair<int, int>> targets;
  double weight = 1.0;  // the graph enters with weight * (i hbar / 2)^m

  int vertices() const { return static_cast<int>(targets.size()); }
  /// Throws std::invalid_argument on self-loops or out-of-range targets.
  void validate() const;
};

/// The ten graphs of the third-order Weyl expansion with their weights.
std::vector<KGraph> weyl_graphs();
/// Loop-bearing graphs; each is the zero operator for the magnetic bivector.
std::vector<KGraph> vanishing_graphs();

/// Bidifferential terms of the unweighted graph operator, coefficients as x-jets.
std::vector<BidiffTerm> graph_terms(const KGraph& graph, const PoissonMatrixJet& P);

/// Unweighted graph operator applied to phase-space jets f and g.
Jet graph_apply(const KGraph& graph, const PoissonMatrixJet& P, const Jet& f, const Jet& g);

/// Weighted sum over weyl_graphs() as an expansion at t = 1/2.
StarExpansion kontsevich_expansion(const Vec3& x0, const MonopoleConfig& cfg, int jet_order,
                                   bool constant_beta = false);

}  // namespace monopole

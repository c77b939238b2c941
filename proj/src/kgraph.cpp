#include "monopole/kgraph.hpp"

#include <functional>
#include <stdexcept>

#include <fmt/format.h>

namespace monopole {

namespace {

using C = std::complex<double>;

struct Assignment {
  std::vector<std::pair<int, int>> index;  // (a, b) per vertex
};

// Calls visit(index pairs, incoming multi-indices of vertices, F, G) for every
// index assignment with all vertex entries nonzero.
void for_each_assignment(const KGraph& graph, const PoissonMatrixJet& P,
                         const std::function<void(const std::vector<std::pair<int, int>>&,
                                                  const std::vector<MultiIndex>&, const MultiIndex&,
                                                  const MultiIndex&)>& visit) {
  graph.validate();
  const int m = graph.vertices();
  std::vector<std::pair<int, int>> entries;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      if (!P[a][b].is_zero()) entries.emplace_back(a, b);
  std::vector<std::pair<int, int>> choice(static_cast<std::size_t>(m));
  std::vector<MultiIndex> incoming(static_cast<std::size_t>(m));
  auto rec = [&](auto&& self, int v) -> void {
    if (v == m) {
      std::fill(incoming.begin(), incoming.end(), MultiIndex{});
      MultiIndex inF{};
      MultiIndex inG{};
      for (int k = 0; k < m; ++k) {
        const auto [a, b] = choice[static_cast<std::size_t>(k)];
        const auto [ta, tb] = graph.targets[static_cast<std::size_t>(k)];
        for (const auto& [target, idx] : {std::pair{ta, a}, std::pair{tb, b}}) {
          MultiIndex& slot = target == KGraph::F   ? inF
                             : target == KGraph::G ? inG
                                                   : incoming[static_cast<std::size_t>(target)];
          ++slot[static_cast<std::size_t>(idx)];
        }
      }
      visit(choice, incoming, inF, inG);
      return;
    }
    for (const auto& e : entries) {
      choice[static_cast<std::size_t>(v)] = e;
      self(self, v + 1);
    }
  };
  rec(rec, 0);
}

// Product of the differentiated bivector entries, or nullopt when a factor
// vanishes identically.
std::optional<Jet> vertex_product(const PoissonMatrixJet& P, const std::vector<std::pair<int, int>>& choice,
                                  const std::vector<MultiIndex>& incoming) {
  std::optional<Jet> prod;
  for (std::size_t k = 0; k < choice.size(); ++k) {
    const Jet d = P[choice[k].first][choice[k].second].derive(incoming[k]);
    if (d.is_zero()) return std::nullopt;
    if (prod) {
      prod = *prod * d;
    } else {
      prod = d;
    }
  }
  return prod;
}

KGraph make(std::string name, std::vector<std::pair<int, int>> targets, double weight) {
  return KGraph{std::move(name), std::move(targets), weight};
}

}  // namespace

void KGraph::validate() const {
  const int m = vertices();
  for (int k = 0; k < m; ++k) {
    for (int t : {targets[static_cast<std::size_t>(k)].first, targets[static_cast<std::size_t>(k)].second}) {
      if (t == k) throw std::invalid_argument(fmt::format("KGraph {}: self-loop at vertex {}", name, k));
      if (t != F && t != G && (t < 0 || t >= m))
        throw std::invalid_argument(fmt::format("KGraph {}: edge target {} out of range", name, t));
    }
  }
}

std::vector<KGraph> weyl_graphs() {
  const int F = KGraph::F;
  const int G = KGraph::G;
  return {
      make("empty", {}, 1.0),
      make("wedge", {{F, G}}, 1.0),
      make("wedge^2", {{F, G}, {F, G}}, 1.0 / 2.0),
      make("wedge^3", {{F, G}, {F, G}, {F, G}}, 1.0 / 6.0),
      make("left-hook", {{F, G}, {F, 0}}, 1.0 / 3.0),
      make("right-hook", {{F, G}, {0, G}}, 1.0 / 3.0),
      make("left-hook+wedge", {{F, G}, {F, 0}, {F, G}}, 1.0 / 3.0),
      make("right-hook+wedge", {{F, G}, {0, G}, {F, G}}, 1.0 / 3.0),
      make("left-double-hook", {{F, G}, {F, 0}, {F, 0}}, 1.0 / 6.0),
      make("right-double-hook", {{F, G}, {0, G}, {0, G}}, 1.0 / 6.0),
  };
}

std::vector<KGraph> vanishing_graphs() {
  const int F = KGraph::F;
  const int G = KGraph::G;
  return {
      make("loop", {{F, 1}, {0, G}}, 1.0),
      make("hook-chain", {{F, G}, {F, 0}, {1, G}}, 1.0),
      make("hook-fork", {{F, G}, {F, 0}, {0, 1}}, 1.0),
      make("loop+wedge", {{F, 1}, {0, G}, {F, G}}, 1.0),
  };
}

std::vector<BidiffTerm> graph_terms(const KGraph& graph, const PoissonMatrixJet& P) {
  std::vector<BidiffTerm> out;
  const int order = P[0][3].order();
  if (graph.vertices() == 0) {
    out.push_back({0, {}, {}, Jet::constant(3, order, {P[0][3].base()[0], P[0][3].base()[1], P[0][3].base()[2]}, 1.0)});
    return out;
  }
  for_each_assignment(graph, P, [&](const auto& choice, const auto& incoming, const MultiIndex& inF,
                                    const MultiIndex& inG) {
    auto prod = vertex_product(P, choice, incoming);
    if (!prod) return;
    out.push_back({graph.vertices(), inF, inG, prod->restricted(3)});
  });
  return out;
}

Jet graph_apply(const KGraph& graph, const PoissonMatrixJet& P, const Jet& f, const Jet& g) {
  if (graph.vertices() == 0) return f * g;
  // Order left after the largest possible differentiation of f and g.
  int max_f = 0;
  int max_g = 0;
  for (const auto& [ta, tb] : graph.targets) {
    max_f += (ta == KGraph::F) + (tb == KGraph::F);
    max_g += (ta == KGraph::G) + (tb == KGraph::G);
  }
  const int order = std::min(f.order() - max_f, g.order() - max_g);
  if (order < 0) throw std::invalid_argument("graph_apply: operands not deep enough for the graph");
  Jet out(6, order, f.base());
  for_each_assignment(graph, P, [&](const auto& choice, const auto& incoming, const MultiIndex& inF,
                                    const MultiIndex& inG) {
    auto prod = vertex_product(P, choice, incoming);
    if (!prod) return;
    const Jet df = f.derive(inF).truncated(order);
    const Jet dg = g.derive(inG).truncated(order);
    out.add_product(prod->truncated(std::min(order, prod->order())), df * dg);
  });
  return out;
}

StarExpansion kontsevich_expansion(const Vec3& x0, const MonopoleConfig& cfg, int jet_order, bool constant_beta) {
  const PoissonMatrixJet P = poisson_matrix_jet(x0, {0, 0, 0}, cfg, jet_order, constant_beta);
  StarExpansion out;
  out.t = 0.5;
  out.x0 = x0;
  out.order = 3;
  for (const auto& graph : weyl_graphs()) {
    const C w = graph.weight * std::pow(C(0.0, 0.5), graph.vertices());
    for (auto& term : graph_terms(graph, P)) {
      term.coeff *= w;
      out.terms.push_back(std::move(term));
    }
  }
  out.normalize();
  return out;
}

}  // namespace monopole

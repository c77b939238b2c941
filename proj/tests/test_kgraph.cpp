#include <cmath>
#include <complex>
#include <set>

#include <doctest.h>

#include "monopole/kgraph.hpp"
#include "monopole/sampling.hpp"
#include "monopole/star.hpp"

using namespace monopole;
using C = std::complex<double>;

TEST_CASE("graph catalogue") {
  const auto graphs = weyl_graphs();
  CHECK(graphs.size() == 10);
  std::set<std::string> names;
  double weight_sum[4] = {0, 0, 0, 0};
  for (const auto& g : graphs) {
    CHECK_NOTHROW(g.validate());
    names.insert(g.name);
    REQUIRE(g.vertices() <= 3);
    weight_sum[g.vertices()] += g.weight;
  }
  CHECK(names.size() == 10);
  CHECK(weight_sum[0] == doctest::Approx(1.0));
  CHECK(weight_sum[1] == doctest::Approx(1.0));
  CHECK(weight_sum[2] == doctest::Approx(0.5 + 2.0 / 3));
  CHECK(weight_sum[3] == doctest::Approx(1.0 / 6 + 2.0 / 3 + 2.0 / 6));
  for (const auto& g : vanishing_graphs()) CHECK_NOTHROW(g.validate());
  CHECK_THROWS_AS((KGraph{"self", {{0, KGraph::G}}, 1.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((KGraph{"range", {{KGraph::F, 3}}, 1.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((KGraph{"ground", {{-3, KGraph::G}}, 1.0}.validate()), std::invalid_argument);
}

TEST_CASE("graph operators") {
  const auto cfg = MonopoleConfig::quantized(2);
  const Vec3 x0{0.5, 0.7, -0.6};
  const Vec3 p0{0.3, 0.0, -0.4};
  const auto base = phase_base(x0, p0);
  const auto P = poisson_matrix_jet(x0, p0, cfg, 4);
  const auto graphs = weyl_graphs();
  const KGraph& wedge = graphs[1];
  REQUIRE(wedge.name == "wedge");
  Rng rng(400);

  SUBCASE("wedge is the Poisson bracket") {
    const Jet x1 = Jet::variable(6, 4, base, 0);
    const Jet p1 = Jet::variable(6, 4, base, 3);
    const Jet one = Jet::constant(6, 3, base, 1.0);
    CHECK((graph_apply(wedge, P, x1, p1) - one).max_abs() <= 1e-15);
    const Jet f = random_polynomial_jet(rng, 6, 4, 4, base);
    const Jet g = random_polynomial_jet(rng, 6, 4, 4, base);
    CHECK((graph_apply(wedge, P, f, g) - poisson_bracket(P, f, g)).max_abs() <= 1e-12);
    CHECK(graph_terms(wedge, P).size() == 12);
  }
  SUBCASE("constant f kills graphs with an edge into F") {
    const Jet c = Jet::constant(6, 4, base, C(2.0, 1.0));
    const Jet g = random_polynomial_jet(rng, 6, 4, 4, base);
    for (std::size_t k = 1; k < graphs.size(); ++k) CHECK(graph_apply(graphs[k], P, c, g).is_zero());
  }
  SUBCASE("loop-bearing graphs vanish") {
    for (bool cb : {false, true}) {
      const auto Pc = poisson_matrix_jet(x0, p0, cfg, 5, cb);
      for (int trial = 0; trial < 3; ++trial) {
        const Jet f = random_polynomial_jet(rng, 6, 5, 5, base);
        const Jet g = random_polynomial_jet(rng, 6, 5, 5, base);
        for (const auto& graph : vanishing_graphs()) {
          CHECK(graph_terms(graph, Pc).empty());
          CHECK(graph_apply(graph, Pc, f, g).max_abs() <= 1e-13);
        }
      }
    }
  }
  SUBCASE("graph terms agree with direct application") {
    const auto P5 = poisson_matrix_jet(x0, p0, cfg, 5);
    const Jet f = random_polynomial_jet(rng, 6, 5, 5, base);
    const Jet g = random_polynomial_jet(rng, 6, 5, 5, base);
    for (const auto& graph : graphs) {
      const Jet direct = graph_apply(graph, P5, f, g);
      Jet summed(6, direct.order(), base);
      for (const auto& term : graph_terms(graph, P5)) {
        const Jet c = term.coeff.embedded(6, base);
        summed.add_product(c, f.derive(term.left) * g.derive(term.right));
      }
      CHECK((summed - direct).max_abs() <= 1e-11);
    }
  }
}

TEST_CASE("weighted graph sum equals the Weyl expansion") {
  const auto cfg = MonopoleConfig::quantized(1);
  Rng rng(410);
  for (int trial = 0; trial < 3; ++trial) {
    const Vec3 x0 = random_base_point(rng, 0.6, 1.8);
    for (bool cb : {false, true}) {
      const StarExpansion graphs = kontsevich_expansion(x0, cfg, 5, cb);
      const StarExpansion direct = star_expansion(0.5, {x0, 3, 5, cb}, cfg);
      CHECK(StarExpansion::max_difference(graphs, direct) <= 1e-10);
      CHECK(graphs.t == 0.5);
    }
  }
}

#include <cmath>
#include <complex>

#include <doctest.h>

#include "monopole/errors.hpp"
#include "monopole/exponent.hpp"
#include "monopole/field_jets.hpp"
#include "monopole/sampling.hpp"
#include "monopole/star.hpp"
#include "monopole/wpoly.hpp"
#include "oracles.hpp"

using namespace monopole;
using C = std::complex<double>;
const C kI{0.0, 1.0};

namespace {

// Nested integral done in closed form one variable at a time.
double moment_oracle(int c, int d, double t) {
  auto P = [](double base, int e) { return std::pow(base, e); };
  const double inner_top = (P(1 - t, c + d + 2) - P(-t, c + d + 2)) / (c + d + 2);
  const double inner_bottom = P(-t, d + 1) * (P(1 - t, c + 1) - P(-t, c + 1)) / (c + 1);
  return (inner_top - inner_bottom) / (d + 1);
}

std::vector<Vec3> base_points(std::uint64_t seed, int count, double r_lo = 0.7) {
  Rng rng(seed);
  std::vector<Vec3> out;
  for (int i = 0; i < count; ++i) out.push_back(random_base_point(rng, r_lo, 2.0));
  return out;
}

HJet random_hjet(Rng& rng, const std::vector<double>& base, int order) {
  return HJet::classical(random_polynomial_jet(rng, 6, order, order, base));
}

double max_grade_difference(const HJet& a, const HJet& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.grades.size(); ++k) m = std::max(m, (a.grades[k] - b.grades[k]).max_abs());
  return m;
}

}  // namespace

TEST_CASE("ordered moments") {
  CHECK(ordered_moment(0, 0, 0.7) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(ordered_moment(1, 0, 0.0) == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(ordered_moment(0, 1, 0.0) == doctest::Approx(1.0 / 6).epsilon(1e-15));
  for (double t : {0.0, 0.3, 0.5, 1.0, -0.4})
    for (int c = 0; c <= 3; ++c)
      for (int d = 0; c + d <= 3; ++d) CHECK(std::abs(ordered_moment(c, d, t) - moment_oracle(c, d, t)) <= 1e-14);
}

TEST_CASE("graded exponential of a single monomial") {
  const std::vector<double> base{0.3, 0.2, 1.0};
  const Jet c = Jet::constant(3, 2, base, C(0.0, 0.7));
  WPoly E;
  const auto m = oracle::wmono({oracle::U(0), oracle::Vp(1)});
  E.add(1, m, c);
  const WPoly X = graded_exp(E, 3);
  CHECK(X.size() == 4);
  double fact = 1.0;
  WMonomial power{};
  for (int k = 0; k <= 3; ++k) {
    if (k > 0) fact *= k;
    const Jet* got = X.find(k, power);
    REQUIRE(got != nullptr);
    CHECK(std::abs(got->value() - std::pow(C(0.0, 0.7), k) / fact) <= 1e-15);
    for (std::size_t v = 0; v < power.size(); ++v) power[v] = static_cast<std::uint8_t>(power[v] + m[v]);
  }
  CHECK_THROWS_AS(graded_exp(WPoly{}, 2), std::invalid_argument);
}

TEST_CASE("flux exponent matches the closed form") {
  for (int n : {1, 2}) {
    const auto cfg = MonopoleConfig::quantized(n);
    for (const Vec3& x0 : base_points(300 + static_cast<std::uint64_t>(n), 5)) {
      const oracle::BetaData B(x0, cfg, false);
      for (int order = 1; order <= 3; ++order)
        for (double t : {0.0, 0.3, 0.5, 1.0, -0.25}) {
          const ExponentParams p{x0, order, 5, false};
          CHECK(oracle::max_difference(oracle::values(exponent_flux(t, p, cfg)), oracle::exponent_shifted(t, B, order)) <=
                1e-12);
        }
    }
  }
}

TEST_CASE("Weyl-point coefficients of the exponent") {
  const auto cfg = MonopoleConfig::quantized(1);
  const Vec3 x0{0.4, -0.9, 0.7};
  const oracle::BetaData B(x0, cfg, false);
  oracle::WMap expected = oracle::magnetic_exponent(B, -0.5 * kI, -0.5 * kI / 6.0, 0.5 * kI / 6.0,
                                                    -0.25 * kI / 12.0, -0.25 * kI / 12.0, 0.0, 3);
  for (int i = 0; i < 3; ++i) {
    oracle::add(expected, 1, oracle::wmono({oracle::U(i), oracle::Vp(i)}), 0.5 * kI);
    oracle::add(expected, 1, oracle::wmono({oracle::V(i), oracle::Up(i)}), -0.5 * kI);
  }
  CHECK(oracle::max_difference(oracle::values(exponent_flux(0.5, {x0, 3, 5, false}, cfg)), expected) <= 1e-13);
}

TEST_CASE("Zassenhaus exponent") {
  const auto cfg = MonopoleConfig::quantized(2);
  for (const Vec3& x0 : base_points(310, 5)) {
    const ExponentParams p{x0, 3, 5, false};
    const oracle::BetaData B(x0, cfg, false);
    SUBCASE("second term is (i/2) u.beta u'") {
      oracle::WMap c2;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          oracle::add(c2, 1, oracle::wmono({oracle::U(i), oracle::Up(j)}), 0.5 * kI * B.b[i][j]);
      CHECK(oracle::max_difference(oracle::values(zassenhaus_terms(p, cfg).c2), c2) <= 1e-14);
    }
    SUBCASE("unshifted exponent matches the closed form") {
      CHECK(oracle::max_difference(oracle::values(exponent_zassenhaus(p, cfg)), oracle::exponent_unshifted(B, 3)) <=
            1e-12);
    }
    SUBCASE("shift reproduces the flux exponent on full jets") {
      for (double t : {0.0, 0.3, 0.5, 1.0}) {
        const WPoly a = exponent_flux(t, p, cfg);
        const WPoly b = exponent_zassenhaus_shifted(t, p, cfg);
        CHECK(oracle::max_difference(oracle::values(a), oracle::values(b)) <= 1e-12);
        double worst = 0.0;
        for (const auto& term : a.terms()) {
          const Jet* other = b.find(term.grade, term.monomial);
          REQUIRE(other != nullptr);
          const std::size_t n = std::min(term.coeff.size(), other->size());
          for (std::size_t k = 0; k < n; ++k) {
            const C x = term.coeff.coeffs()[k];
            worst = std::max(worst, std::abs(x - other->coeffs()[k]) / std::max(1.0, std::abs(x)));
          }
        }
        // monomials only one route produces carry cancellation residue
        for (const auto& term : b.terms())
          if (!a.find(term.grade, term.monomial)) worst = std::max(worst, term.coeff.max_abs());
        CHECK(worst <= 1e-11);
      }
    }
  }
}

TEST_CASE("exponent limits") {
  const auto cfg = MonopoleConfig::quantized(1);
  const Vec3 x0{0.2, 0.5, -0.8};
  SUBCASE("constant beta keeps only grade 1") {
    for (double t : {0.0, 0.5, 0.8}) {
      const WPoly e = exponent_flux(t, {x0, 3, 5, true}, cfg);
      for (const auto& term : e.terms()) {
        if (term.grade >= 2) CHECK(term.coeff.is_zero());
      }
      CHECK(e.max_grade() == 1);
    }
  }
  SUBCASE("terms free of u' are the u.v' pairing") {
    const double t = 0.3;
    const WPoly e = exponent_flux(t, {x0, 3, 5, false}, cfg);
    int seen = 0;
    for (const auto& term : e.terms()) {
      bool has_uprime = false;
      for (int i = 0; i < 3; ++i) has_uprime |= term.monomial[static_cast<std::size_t>(oracle::Up(i))] > 0;
      if (has_uprime) continue;
      ++seen;
      CHECK(term.grade == 1);
      bool pairing = false;
      for (int i = 0; i < 3; ++i) pairing |= term.monomial == oracle::wmono({oracle::U(i), oracle::Vp(i)});
      CHECK(pairing);
      CHECK(std::abs(term.coeff.value() - kI * (1 - t)) <= 1e-15);
    }
    CHECK(seen == 3);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(exponent_flux(0.5, {x0, 4, 5, false}, cfg), std::invalid_argument);
    CHECK_THROWS_AS(exponent_flux(0.5, {Vec3{0, 0, 0}, 3, 5, false}, cfg), DomainError);
    CHECK_THROWS_AS(exponent_zassenhaus({Vec3{1e-8, 0, 0}, 3, 5, false}, cfg), DomainError);
  }
}

TEST_CASE("star expansion matches the closed bidifferential form") {
  const auto cfg = MonopoleConfig::quantized(2);
  for (const Vec3& x0 : base_points(320, 3)) {
    const oracle::BetaData B(x0, cfg, false);
    for (int order = 1; order <= 3; ++order)
      for (double t : {0.0, 0.3, 0.5, 1.0}) {
        const oracle::BMap expected = oracle::star_closed_form(t, B, order);
        for (auto route : {ExponentRoute::Flux, ExponentRoute::Zassenhaus}) {
          const StarExpansion e = star_expansion(t, {x0, order, 5, false}, cfg, route);
          CHECK(oracle::max_difference(oracle::values(e), expected) <= 1e-11);
          for (const auto& term : e.terms)
            if (term.grade >= 1) CHECK(!(degree(term.left) == 0 && degree(term.right) == 0));
        }
      }
  }
}

TEST_CASE("constant beta gives the twisted Moyal expansion") {
  const auto cfg = MonopoleConfig::quantized(1);
  for (const Vec3& x0 : base_points(330, 3)) {
    const oracle::BetaData B(x0, cfg, true);
    for (double t : {0.0, 0.5, 0.9}) {
      const StarExpansion e = star_expansion(t, {x0, 3, 5, true}, cfg);
      CHECK(oracle::max_difference(oracle::values(e), oracle::star_closed_form(t, B, 3)) <= 1e-14);
      for (const auto& term : e.terms) {
        CHECK((term.coeff - term.coeff.frozen()).is_zero());
        // one derivative on each side per power of the first-order operator
        CHECK(degree(term.left) == term.grade);
        CHECK(degree(term.right) == term.grade);
      }
    }
  }
}

TEST_CASE("star product identities") {
  const auto cfg = MonopoleConfig::quantized(1);
  const Vec3 x0{0.6, -0.3, 0.9};
  const Vec3 p0{0.2, -0.5, 0.1};
  const auto base = phase_base(x0, p0);
  Rng rng(340);
  const int N = 5;

  SUBCASE("unit") {
    for (double t : {0.0, 0.5, 1.0}) {
      const StarExpansion e = star_expansion(t, {x0, 3, 5, false}, cfg);
      const HJet one = HJet::classical(Jet::constant(6, N, base, 1.0));
      const HJet g = random_hjet(rng, base, N);
      for (const HJet& r : {star_apply(e, one, g), star_apply(e, g, one)}) {
        REQUIRE(r.grades.size() == 4);
        CHECK((r.grades[0] - g.grades[0].truncated(r.order())).is_zero());
        for (int k = 1; k <= 3; ++k) CHECK(r.grades[static_cast<std::size_t>(k)].is_zero());
      }
    }
  }
  SUBCASE("bilinearity and classical limit") {
    const StarExpansion e = star_expansion(0.3, {x0, 3, 5, false}, cfg);
    const HJet f1 = random_hjet(rng, base, N), f2 = random_hjet(rng, base, N), g = random_hjet(rng, base, N);
    const HJet sum = HJet::classical(f1.grades[0] + C(2.0, -1.0) * f2.grades[0]);
    const HJet lhs = star_apply(e, sum, g);
    HJet rhs = star_apply(e, f1, g);
    const HJet r2 = star_apply(e, f2, g);
    for (std::size_t k = 0; k < rhs.grades.size(); ++k) rhs.grades[k].add_scaled(r2.grades[k], C(2.0, -1.0));
    double scale = 1.0;
    for (const auto& j : lhs.grades) scale = std::max(scale, j.max_abs());
    CHECK(max_grade_difference(lhs, rhs) <= 1e-14 * scale);
    CHECK((lhs.grades[0] - (sum.grades[0] * g.grades[0]).truncated(lhs.order())).max_abs() <= 1e-13);
  }
  SUBCASE("canonical commutators") {
    const auto b0 = beta_matrix(x0, cfg);
    for (double t : {0.0, 0.3, 0.5, 1.0}) {
      const StarExpansion e = star_expansion(t, {x0, 3, 5, false}, cfg);
      auto comm = [&](int a, int b) {
        const HJet A = HJet::classical(Jet::variable(6, 4, base, a));
        const HJet B = HJet::classical(Jet::variable(6, 4, base, b));
        const HJet ab = star_apply(e, A, B), ba = star_apply(e, B, A);
        std::vector<C> out;
        for (std::size_t k = 0; k < ab.grades.size(); ++k) out.push_back(ab.grades[k].value() - ba.grades[k].value());
        return out;
      };
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          const auto xp = comm(i, 3 + j);
          const auto pp = comm(3 + i, 3 + j);
          CHECK(std::abs(xp[1] - (i == j ? kI : C{})) <= 1e-15);
          CHECK(std::abs(pp[1] - kI * b0[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) <= 1e-14);
          for (std::size_t k : {0u, 2u, 3u}) {
            CHECK(std::abs(xp[k]) <= 1e-15);
            CHECK(std::abs(pp[k]) <= 1e-14);
          }
        }
    }
  }
  SUBCASE("t = 0 orders position-only factors to the left") {
    const StarExpansion e = star_expansion(0.0, {x0, 3, 5, false}, cfg);
    // f depends on x only, g on p only
    const auto X = [&](int v) { return Jet::variable(6, N, base, v); };
    const Jet f = X(0) * X(0) * X(1) + C(0.0, 2.0) * X(2) * X(2) * X(2);
    const Jet g = X(3) * X(4) * X(5) + X(5) * X(5) * X(5) * X(4);
    const HJet fg = star_apply(e, HJet::classical(f), HJet::classical(g));
    CHECK((fg.grades[0] - (f * g).truncated(fg.order())).max_abs() <= 1e-14);
    for (int k = 1; k <= 3; ++k) CHECK(fg.grades[static_cast<std::size_t>(k)].max_abs() <= 1e-14);
    const HJet gf = star_apply(e, HJet::classical(g), HJet::classical(f));
    CHECK(gf.grades[1].max_abs() > 0.1);
  }
  SUBCASE("Weyl symmetry") {
    const StarExpansion e = star_expansion(0.5, {x0, 3, 5, false}, cfg);
    for (int trial = 0; trial < 5; ++trial) {
      const HJet f = random_hjet(rng, base, N), g = random_hjet(rng, base, N);
      const HJet fg = star_apply(e, f, g), gf = star_apply(e, g, f);
      for (std::size_t k = 0; k < fg.grades.size(); ++k) {
        const double sign = k % 2 == 0 ? 1.0 : -1.0;
        CHECK((fg.grades[k] - sign * gf.grades[k]).max_abs() <= 1e-11);
      }
    }
  }
  SUBCASE("associativity") {
    const auto b6 = phase_base(x0, p0);
    for (double t : {0.0, 0.3}) {
      const StarExpansion e = star_expansion(t, {x0, 3, 5, false}, cfg);
      for (int trial = 0; trial < 3; ++trial) {
        const HJet f = random_hjet(rng, b6, 6), g = random_hjet(rng, b6, 6), h = random_hjet(rng, b6, 6);
        for (double r : associator_residuals(e, f, g, h)) CHECK(r <= 1e-9);
      }
    }
  }
  SUBCASE("operand errors") {
    const StarExpansion e = star_expansion(0.5, {x0, 3, 5, false}, cfg);
    const HJet f = random_hjet(rng, base, N);
    const HJet shallow = random_hjet(rng, base, 2);
    const HJet elsewhere = random_hjet(rng, phase_base(x0, {0, 0, 0}), N);
    CHECK_THROWS_AS(star_apply(e, f, shallow), std::invalid_argument);
    CHECK_THROWS_AS(star_apply(e, f, elsewhere), std::invalid_argument);
  }
}

TEST_CASE("Poisson matrix and bracket") {
  const auto cfg = MonopoleConfig::quantized(3);
  const Vec3 x0{-0.7, 0.4, 0.5};
  const Vec3 p0{0.1, 0.3, -0.2};
  const auto base = phase_base(x0, p0);
  const auto P = poisson_matrix_jet(x0, p0, cfg, 4);
  const auto b0 = beta_matrix(x0, cfg);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      const auto& e = P[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      CHECK((e + P[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]).is_zero());
      if (a < 3 && b < 3) CHECK(e.is_zero());
      if (a < 3 && b == a + 3) CHECK((e - Jet::constant(6, 4, base, 1.0)).is_zero());
      if (a >= 3 && b >= 3)
        CHECK(std::abs(e.value() - b0[static_cast<std::size_t>(a - 3)][static_cast<std::size_t>(b - 3)]) <= 1e-15);
    }
  Rng rng(350);
  const Jet f = random_polynomial_jet(rng, 6, 4, 4, base);
  const Jet g = random_polynomial_jet(rng, 6, 4, 4, base);
  const Jet br = poisson_bracket(P, f, g);
  // explicit bracket at the base point
  C expected = 0.0;
  for (int i = 0; i < 3; ++i) {
    expected += f.coeff(unit_index(i)) * g.coeff(unit_index(3 + i)) - f.coeff(unit_index(3 + i)) * g.coeff(unit_index(i));
    for (int j = 0; j < 3; ++j)
      expected += b0[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * f.coeff(unit_index(3 + i)) *
                  g.coeff(unit_index(3 + j));
  }
  CHECK(std::abs(br.value() - expected) <= 1e-12);
  CHECK((br + poisson_bracket(P, g, f)).max_abs() <= 1e-12);
}

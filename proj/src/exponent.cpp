#include "monopole/exponent.hpp"

#include <cmath>
#include <stdexcept>

#include "monopole/errors.hpp"

namespace monopole {

namespace {

using C = std::complex<double>;
constexpr C kI{0.0, 1.0};

void validate(const ExponentParams& p, const MonopoleConfig& cfg) {
  if (p.order < 1 || p.order > 3) throw std::invalid_argument("exponent: order must be in 1..3");
  if (p.jet_order < p.order - 1) throw std::invalid_argument("exponent: jet order too small for the grade");
  if (norm(p.x0) < cfg.exclusion().r_min) throw DomainError("exponent: base point inside the origin exclusion");
}

double binomial(int n, int k) {
  double b = 1.0;
  for (int j = 1; j <= k; ++j) b = b * (n - k + j) / j;
  return b;
}

double fact(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Multi-indices over three variables with total degree n.
std::vector<std::array<int, 3>> compositions(int n) {
  std::vector<std::array<int, 3>> out;
  for (int a = n; a >= 0; --a)
    for (int b = n - a; b >= 0; --b) out.push_back({a, b, n - a - b});
  return out;
}

double multinomial(const std::array<int, 3>& a) {
  return fact(a[0] + a[1] + a[2]) / (fact(a[0]) * fact(a[1]) * fact(a[2]));
}

// Grade-1 magnetic part B = -i u.beta u', coefficients beta_ij.
WPoly uv_bracket(const JetMatrix3& beta) {
  WPoly out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      WMonomial m{};
      ++m[static_cast<std::size_t>(wvar(WVar::U, i))];
      ++m[static_cast<std::size_t>(wvar(WVar::Uprime, j))];
      out.add(1, m, beta[i][j], -kI);
    }
  return out;
}

}  // namespace

JetMatrix3 exponent_beta(const ExponentParams& p, const MonopoleConfig& cfg) {
  JetMatrix3 beta = beta_jet(p.x0, cfg, p.jet_order);
  if (p.constant_beta)
    for (auto& row : beta)
      for (auto& b : row) b = b.frozen();
  return beta;
}

WPoly symplectic_exponent(double t, const ExponentParams& p) {
  WPoly out;
  const Jet one = Jet::constant(3, p.jet_order, {p.x0[0], p.x0[1], p.x0[2]}, 1.0);
  for (int i = 0; i < 3; ++i) {
    WMonomial uv{};
    ++uv[static_cast<std::size_t>(wvar(WVar::U, i))];
    ++uv[static_cast<std::size_t>(wvar(WVar::Vprime, i))];
    out.add(1, uv, one, kI * (1.0 - t));
    WMonomial vu{};
    ++vu[static_cast<std::size_t>(wvar(WVar::V, i))];
    ++vu[static_cast<std::size_t>(wvar(WVar::Uprime, i))];
    out.add(1, vu, one, -kI * t);
  }
  return out;
}

double ordered_moment(int c, int d, double t) {
  double total = 0.0;
  for (int a = 0; a <= c; ++a)
    for (int b = 0; b <= d; ++b) {
      const double coeff = binomial(c, a) * std::pow(-t, c - a) * binomial(d, b) * std::pow(-t, d - b);
      total += coeff / ((b + 1.0) * (a + b + 2.0));
    }
  return total;
}

WPoly exponent_flux(double t, const ExponentParams& p, const MonopoleConfig& cfg) {
  validate(p, cfg);
  const JetMatrix3 beta = exponent_beta(p, cfg);
  WPoly out = symplectic_exponent(t, p);
  // -i/k! int int u.((y.d)^k beta) u', y = (t1 - t) u + (t2 - t) u', at grade k + 1.
  for (int k = 0; k + 1 <= p.order; ++k) {
    for (int c = 0; c <= k; ++c) {
      const int d = k - c;
      const double base = binomial(k, c) * ordered_moment(c, d, t) / fact(k);
      for (const auto& alpha : compositions(c))
        for (const auto& gamma : compositions(d)) {
          const double w = base * multinomial(alpha) * multinomial(gamma);
          MultiIndex deriv{};
          for (std::size_t q = 0; q < 3; ++q) deriv[q] = static_cast<std::uint8_t>(alpha[q] + gamma[q]);
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
              if (i == j) continue;
              const Jet coeff = beta[i][j].derive(deriv);
              if (coeff.is_zero()) continue;
              WMonomial m{};
              for (int q = 0; q < 3; ++q) {
                m[static_cast<std::size_t>(wvar(WVar::U, q))] = static_cast<std::uint8_t>(alpha[static_cast<std::size_t>(q)]);
                m[static_cast<std::size_t>(wvar(WVar::Uprime, q))] = static_cast<std::uint8_t>(gamma[static_cast<std::size_t>(q)]);
              }
              ++m[static_cast<std::size_t>(wvar(WVar::U, i))];
              ++m[static_cast<std::size_t>(wvar(WVar::Uprime, j))];
              out.add(k + 1, m, coeff, -kI * w);
            }
        }
    }
  }
  out.prune();
  return out;
}

ZassenhausTerms zassenhaus_terms(const ExponentParams& p, const MonopoleConfig& cfg) {
  validate(p, cfg);
  const WPoly xy = uv_bracket(exponent_beta(p, cfg));  // [X, Y]
  const WPoly yx = -1.0 * xy;                          // [Y, X]
  auto ad_x = [](const WPoly& f) { return f.directional(WVar::U); };
  auto ad_y = [](const WPoly& f) { return f.directional(WVar::Uprime); };

  // C_2(X,Y) = -1/2 [X,Y]
  // C_3(X,Y) = 1/3 [Y,[X,Y]] + 1/6 [X,[X,Y]]
  // C_4(X,Y) = -1/8 [Y,[Y,[X,Y]]] - 1/24 [X,[X,[X,Y]]] - 1/8 [Y,[X,[X,Y]]]
  // and C'_n(X,Y) = (-1)^(n+1) C_n(Y,X): exchange ad_x <-> ad_y and [X,Y] -> [Y,X].
  ZassenhausTerms z;
  z.c2 = 0.5 * yx;
  if (p.order >= 2) z.c3 = (1.0 / 3.0) * ad_x(yx) + (1.0 / 6.0) * ad_y(yx);
  if (p.order >= 3)
    z.c4 = (1.0 / 8.0) * ad_x(ad_x(yx)) + (1.0 / 24.0) * ad_y(ad_y(yx)) + (1.0 / 8.0) * ad_x(ad_y(yx));
  return z;
}

WPoly exponent_zassenhaus(const ExponentParams& p, const MonopoleConfig& cfg) {
  const ZassenhausTerms z = zassenhaus_terms(p, cfg);
  WPoly out = -1.0 * (z.c2 + z.c3 + z.c4);
  out.prune();
  return out;
}

WPoly shift(const WPoly& f, double t, int max_grade) {
  // sum_m (-t)^m / m! ((u + u').d)^m F; each application raises the grade by one.
  WPoly out = f;
  WPoly term = f;
  for (int m = 1; m <= max_grade; ++m) {
    WPoly next = term.directional(WVar::U) + term.directional(WVar::Uprime);
    term = WPoly();
    for (const auto& tt : next.terms())
      if (tt.grade <= max_grade) term.add(tt.grade, tt.monomial, tt.coeff, -t / m);
    if (term.empty()) break;
    out += term;
  }
  out.prune();
  return out;
}

WPoly exponent_zassenhaus_shifted(double t, const ExponentParams& p, const MonopoleConfig& cfg) {
  WPoly out = shift(exponent_zassenhaus(p, cfg), t, p.order) + symplectic_exponent(t, p);
  out.prune();
  return out;
}

}  // namespace monopole

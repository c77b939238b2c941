#include "monopole/rep.hpp"

#include <cmath>
#include <stdexcept>

#include "monopole/bundle.hpp"
#include "monopole/errors.hpp"
#include "monopole/field_jets.hpp"

namespace monopole {

namespace {

using C = std::complex<double>;
constexpr C kI{0.0, 1.0};

std::vector<double> base_of(const Vec3& x) { return {x[0], x[1], x[2]}; }

void check_axis(int k) {
  if (k < 0 || k > 2) throw std::invalid_argument("axis index must be 0, 1 or 2");
}

Jet jet_power(const Jet& x, int e) {
  Jet out = Jet::constant(x.vars(), x.order(), x.base(), 1.0);
  for (int k = 0; k < e; ++k) out = out * x;
  return out;
}

// Quaternion-valued jet: components (w, q1, q2, q3).
struct QJet {
  std::array<Jet, 4> c;

  QJet derive(int k) const { return {{c[0].derive(k), c[1].derive(k), c[2].derive(k), c[3].derive(k)}}; }
  QJet truncated(int order) const {
    return {{c[0].truncated(order), c[1].truncated(order), c[2].truncated(order), c[3].truncated(order)}};
  }
  int order() const { return c[0].order(); }
  Quaternion value() const { return {c[0].value().real(), c[1].value().real(), c[2].value().real(), c[3].value().real()}; }
  QJet& operator+=(const QJet& o) {
    for (std::size_t m = 0; m < 4; ++m) c[m] += o.c[m];
    return *this;
  }
  QJet& operator-=(const QJet& o) {
    for (std::size_t m = 0; m < 4; ++m) c[m] -= o.c[m];
    return *this;
  }
  QJet& operator*=(double s) {
    for (auto& j : c) j *= s;
    return *this;
  }
};

QJet operator-(QJet a, const QJet& b) { return a -= b; }

// Hamilton product of quaternion jets.
QJet qmul(const QJet& a, const QJet& b) {
  const auto& [a0, a1, a2, a3] = a.c;
  const auto& [b0, b1, b2, b3] = b.c;
  return {{a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3, a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
           a0 * b2 + a2 * b0 + a3 * b1 - a1 * b3, a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1}};
}

QJet section_jet(const QTestSection& psi, const Vec3& x0, int order) {
  return {{psi.parts[0].jet(x0, order), psi.parts[1].jet(x0, order), psi.parts[2].jet(x0, order),
           psi.parts[3].jet(x0, order)}};
}

// (g A_k) as imaginary quaternion jets, k = 0..2.
std::array<QJet, 3> potential_qjets(double g, const Vec3& x0, int order, const Exclusion& excl) {
  const JetMatrix3 c = su2_potential_jet(x0, order, excl);
  const auto zero = Jet(3, order, base_of(x0));
  std::array<QJet, 3> out{{{{zero, zero, zero, zero}}, {{zero, zero, zero, zero}}, {{zero, zero, zero, zero}}}};
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t j = 0; j < 3; ++j) out[k].c[j + 1] = g * c[k][j];
  return out;
}

QJet j_qjet(const Vec3& x0, int order, const Exclusion& excl) {
  if (norm(x0) < excl.r_min) throw DomainError("j field: origin exclusion");
  const auto x = coordinate_jets(x0, order);
  const Jet inv = norm_power_jet(x0, -1.0, order, excl);
  return {{Jet(3, order, base_of(x0)), x[0] * inv, x[1] * inv, x[2] * inv}};
}

// nabla_k applied to a quaternion jet; the result has one order less.
QJet q_nabla(const QJet& psi, const std::array<QJet, 3>& A, int k) {
  const int order = psi.order() - 1;
  QJet out = psi.derive(k);
  out += qmul(A[static_cast<std::size_t>(k)].truncated(order), psi.truncated(order));
  return out;
}

// P_j applied to a complex jet of Psi.
Jet kinetic(const Jet& psi, const JetVec3& eA, int j, double hbar) {
  const int order = psi.order() - 1;
  Jet out = (-kI * hbar) * psi.derive(j);
  out.add_product(eA[static_cast<std::size_t>(j)].truncated(order), psi.truncated(order), -1.0);
  return out;
}

double qnorm(const Quaternion& q) { return q.norm(); }

}  // namespace

TestSection::TestSection(std::vector<PolyTerm> poly, const Vec3& center, double sigma, Chart chart)
    : poly_(std::move(poly)), center_(center), sigma_(sigma), chart_(chart) {
  if (!(sigma > 0.0)) throw std::invalid_argument("TestSection: sigma must be positive");
  for (const auto& t : poly_)
    for (int e : t.exponents)
      if (e < 0) throw std::invalid_argument("TestSection: negative exponent");
}

TestSection TestSection::gaussian(const Vec3& center, double sigma, Chart chart) {
  return TestSection({{{0, 0, 0}, 1.0}}, center, sigma, chart);
}

TestSection TestSection::random(Rng& rng, const Vec3& center, double sigma, int degree, Chart chart, bool real) {
  std::vector<PolyTerm> poly;
  for (int a = 0; a <= degree; ++a)
    for (int b = 0; a + b <= degree; ++b)
      for (int c = 0; a + b + c <= degree; ++c) {
        const double re = rng.normal();
        const double im = real ? 0.0 : rng.normal();
        poly.push_back({{a, b, c}, {re, im}});
      }
  return TestSection(std::move(poly), center, sigma, chart);
}

Jet TestSection::jet(const Vec3& x0, int order) const {
  const auto x = coordinate_jets(x0, order);
  Jet p(3, order, base_of(x0));
  for (const auto& t : poly_) {
    Jet m = Jet::constant(3, order, base_of(x0), t.coeff);
    for (std::size_t i = 0; i < 3; ++i) m = m * jet_power(x[i], t.exponents[i]);
    p += m;
  }
  Jet r2(3, order, base_of(x0));
  for (int i = 0; i < 3; ++i) {
    const Jet d = x[static_cast<std::size_t>(i)] - Jet::constant(3, order, base_of(x0), center_[i]);
    r2.add_product(d, d);
  }
  return p * exp((-1.0 / (sigma_ * sigma_)) * r2);
}

C TestSection::value(const Vec3& x) const {
  C p{};
  for (const auto& t : poly_) {
    C m = t.coeff;
    for (std::size_t i = 0; i < 3; ++i) m *= std::pow(x[static_cast<int>(i)], t.exponents[i]);
    p += m;
  }
  return p * std::exp(-norm2(x - center_) / (sigma_ * sigma_));
}

TestSection TestSection::operator+(const TestSection& o) const {
  if (norm(center_ - o.center_) != 0.0 || sigma_ != o.sigma_ || chart_ != o.chart_)
    throw std::invalid_argument("TestSection: sum needs equal Gaussian factors and charts");
  std::vector<PolyTerm> poly = poly_;
  poly.insert(poly.end(), o.poly_.begin(), o.poly_.end());
  return TestSection(std::move(poly), center_, sigma_, chart_);
}

QTestSection QTestSection::random(Rng& rng, const Vec3& center, double sigma, int degree) {
  return {{TestSection::random(rng, center, sigma, degree, Chart::Plus, true),
           TestSection::random(rng, center, sigma, degree, Chart::Plus, true),
           TestSection::random(rng, center, sigma, degree, Chart::Plus, true),
           TestSection::random(rng, center, sigma, degree, Chart::Plus, true)}};
}

Quaternion QTestSection::value(const Vec3& x) const {
  return {parts[0].value(x).real(), parts[1].value(x).real(), parts[2].value(x).real(), parts[3].value(x).real()};
}

C covariant_derivative(Chart chart, const TestSection& psi, const Vec3& x, int j, const MonopoleConfig& cfg) {
  check_axis(j);
  const Jet p = psi.jet(x, 1);
  const Vec3 eA = wu_yang_potential(chart, x, cfg);
  return -kI * cfg.hbar() * p.coeff(unit_index(j)) - eA[j] * p.value();
}

C translate_V(Chart chart, const TestSection& psi, const Vec3& a, const Vec3& x, const MonopoleConfig& cfg,
              int nodes) {
  if (norm(a) == 0.0) return psi.value(x);
  const double circ = circulation(chart, Polyline({x, x + a}, false), cfg, nodes);
  return std::polar(1.0, -circ / cfg.hbar()) * psi.value(x + a);
}

double projective_residual(Chart chart, const TestSection& psi, const Vec3& a, const Vec3& b, const Vec3& x,
                           const MonopoleConfig& cfg, int nodes) {
  // V(a) V(b) Psi (x) = phase(x, a) (V(b) Psi)(x + a)
  auto phase = [&](const Vec3& from, const Vec3& d) {
    if (norm(d) == 0.0) return C(1.0);
    return std::polar(1.0, -circulation(chart, Polyline({from, from + d}, false), cfg, nodes) / cfg.hbar());
  };
  const C lhs = phase(x, a) * translate_V(chart, psi, b, x + a, cfg, nodes);
  const C rhs = complex_multiplier(x, a, b, cfg) * phase(x, a + b) * psi.value(x + a + b);
  return std::abs(lhs - rhs);
}

C commutator_PP(Chart chart, const TestSection& psi, const Vec3& x, int i, int j, const MonopoleConfig& cfg) {
  check_axis(i);
  check_axis(j);
  const Jet p = psi.jet(x, 2);
  const JetVec3 eA = wu_yang_potential_jet(chart, x, cfg, 2);
  const double hbar = cfg.hbar();
  const C pij = kinetic(kinetic(p, eA, j, hbar), eA, i, hbar).value();
  const C pji = kinetic(kinetic(p, eA, i, hbar), eA, j, hbar).value();
  const double beta = beta_matrix(x, cfg)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return (pij - pji) - kI * hbar * beta * p.value();
}

C commutator_QP(Chart chart, const TestSection& psi, const Vec3& x, int i, int j, const MonopoleConfig& cfg) {
  check_axis(i);
  check_axis(j);
  const Jet p = psi.jet(x, 1);
  const JetVec3 eA = wu_yang_potential_jet(chart, x, cfg, 1);
  const Jet q = coordinate_jets(x, 1)[static_cast<std::size_t>(i)];
  const double hbar = cfg.hbar();
  // Q^i P_j Psi - P_j (Q^i Psi)
  const C qp = x[i] * kinetic(p, eA, j, hbar).value();
  const C pq = kinetic(q * p, eA, j, hbar).value();
  return (qp - pq) - kI * hbar * (i == j ? 1.0 : 0.0) * p.value();
}

Quaternion q_covariant_derivative(double g, const QTestSection& psi, const Vec3& x, int k, const Exclusion& excl) {
  check_axis(k);
  const auto A = potential_qjets(g, x, 1, excl);
  return q_nabla(section_jet(psi, x, 1), A, k).value();
}

QCommutatorResiduals q_commutator_residual(double g, const QTestSection& psi, const Vec3& x, int i, int j,
                                           const Exclusion& excl) {
  check_axis(i);
  check_axis(j);
  const auto A = potential_qjets(g, x, 2, excl);
  const QJet p = section_jet(psi, x, 2);
  const Quaternion comm = (q_nabla(q_nabla(p, A, j), A, i) - q_nabla(q_nabla(p, A, i), A, j)).value();
  double e = 0.0;
  for (int k = 0; k < 3; ++k) e += levi_civita(i, j, k) * x[k];
  const double r = norm(x);
  const Quaternion target = (-0.5 * e / (r * r * r)) * (j_field(x, excl) * psi.value(x));
  return {qnorm(comm - g * target), qnorm(comm - target), qnorm(comm)};
}

double j_commutation_residual(double g, const QTestSection& psi, const Vec3& x, int i, const Exclusion& excl) {
  check_axis(i);
  const auto A = potential_qjets(g, x, 1, excl);
  const QJet p = section_jet(psi, x, 1);
  const QJet J = j_qjet(x, 1, excl);
  const Quaternion j_nabla = j_field(x, excl) * q_nabla(p, A, i).value();
  const Quaternion nabla_j = q_nabla(qmul(J, p), A, i).value();
  return qnorm(j_nabla - nabla_j);
}

Quaternion q_translate(const QTestSection& psi, const Vec3& a, const Vec3& x, int steps, const Exclusion& excl) {
  if (norm(a) == 0.0) return psi.value(x);
  return segment_transport(x, a, steps, excl) * psi.value(x + a);
}

QProjectiveResiduals q_projective_residual(const QTestSection& psi, const Vec3& a, const Vec3& b, const Vec3& x,
                                           double hbar, int steps, const Exclusion& excl) {
  auto T = [&](const Vec3& from, const Vec3& d) {
    return norm(d) == 0.0 ? Quaternion::identity() : segment_transport(from, d, steps, excl);
  };
  const Quaternion end = psi.value(x + a + b);
  const Quaternion lhs = T(x, a) * q_translate(psi, b, x + a, steps, excl);
  const Quaternion M = quaternion_multiplier(x, a, b, hbar, excl);
  const Quaternion Tab = T(x, a + b);
  return {qnorm(lhs - M * Tab * end), qnorm(lhs - Tab * M * end)};
}

}  // namespace monopole

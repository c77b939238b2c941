#include "monopole/star.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "monopole/errors.hpp"

namespace monopole {

namespace {

using C = std::complex<double>;

bool term_less(const BidiffTerm& a, const BidiffTerm& b) {
  return std::tie(a.grade, a.left, a.right) < std::tie(b.grade, b.left, b.right);
}

bool term_same(const BidiffTerm& a, const BidiffTerm& b) {
  return a.grade == b.grade && a.left == b.left && a.right == b.right;
}

C minus_i_power(int n) {
  static const C powers[4] = {C(1, 0), C(0, -1), C(-1, 0), C(0, 1)};
  return powers[n % 4];
}

Jet embed_coeff(const Jet& c, const std::vector<double>& base, int order) {
  const int o = std::min(order, c.order());
  return c.truncated(o).embedded(6, base);
}

}  // namespace

const BidiffTerm* StarExpansion::find(int grade, const MultiIndex& left, const MultiIndex& right) const {
  const BidiffTerm probe{grade, left, right, Jet(1, 0, {0.0})};
  auto it = std::lower_bound(terms.begin(), terms.end(), probe, term_less);
  if (it == terms.end() || !term_same(*it, probe)) return nullptr;
  return &*it;
}

void StarExpansion::normalize() {
  std::sort(terms.begin(), terms.end(), term_less);
  std::vector<BidiffTerm> merged;
  for (auto& t : terms) {
    if (!merged.empty() && term_same(merged.back(), t)) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const BidiffTerm& t) { return t.coeff.is_zero(); });
  terms = std::move(merged);
}

double StarExpansion::max_difference(const StarExpansion& a, const StarExpansion& b) {
  double m = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size() || (i < a.terms.size() && term_less(a.terms[i], b.terms[j]))) {
      m = std::max(m, a.terms[i++].coeff.max_abs());
    } else if (i == a.terms.size() || term_less(b.terms[j], a.terms[i])) {
      m = std::max(m, b.terms[j++].coeff.max_abs());
    } else {
      const Jet& x = a.terms[i++].coeff;
      const Jet& y = b.terms[j++].coeff;
      const std::size_t n = std::min(x.size(), y.size());
      for (std::size_t k = 0; k < n; ++k) m = std::max(m, std::abs(x.coeffs()[k] - y.coeffs()[k]));
    }
  }
  return m;
}

StarExpansion expansion_from_exponent(const WPoly& exponent, double t, const Vec3& x0, int order) {
  StarExpansion out;
  out.t = t;
  out.x0 = x0;
  out.order = order;
  const WPoly e = graded_exp(exponent, order);
  for (const auto& term : e.terms()) {
    BidiffTerm b{term.grade, {}, {}, term.coeff};
    for (int q = 0; q < 3; ++q) {
      const auto k = static_cast<std::size_t>(q);
      b.left[k] = term.monomial[static_cast<std::size_t>(wvar(WVar::V, q))];
      b.left[k + 3] = term.monomial[static_cast<std::size_t>(wvar(WVar::U, q))];
      b.right[k] = term.monomial[static_cast<std::size_t>(wvar(WVar::Vprime, q))];
      b.right[k + 3] = term.monomial[static_cast<std::size_t>(wvar(WVar::Uprime, q))];
    }
    b.coeff *= minus_i_power(degree(term.monomial));
    out.terms.push_back(std::move(b));
  }
  out.normalize();
  return out;
}

StarExpansion star_expansion(double t, const ExponentParams& p, const MonopoleConfig& cfg, ExponentRoute route) {
  const WPoly e = route == ExponentRoute::Flux ? exponent_flux(t, p, cfg) : exponent_zassenhaus_shifted(t, p, cfg);
  return expansion_from_exponent(e, t, p.x0, p.order);
}

std::vector<double> phase_base(const Vec3& x0, const Vec3& p0) {
  return {x0[0], x0[1], x0[2], p0[0], p0[1], p0[2]};
}

HJet star_apply(const StarExpansion& exp, const HJet& f, const HJet& g) {
  if (f.grades.empty() || g.grades.empty()) throw std::invalid_argument("star_apply: empty operand");
  const auto& base = f.base();
  if (g.base() != base) throw std::invalid_argument("star_apply: operands at different base points");
  if (f.grades.front().vars() != 6 || g.grades.front().vars() != 6)
    throw std::invalid_argument("star_apply: operands must be phase-space jets");
  for (int q = 0; q < 3; ++q)
    if (base[static_cast<std::size_t>(q)] != exp.x0[q])
      throw std::invalid_argument("star_apply: operand base does not match the expansion point");
  int out_order = std::min(f.order(), g.order()) - exp.order;
  for (const auto& t : exp.terms) out_order = std::min(out_order, t.coeff.order());
  if (out_order < 0) throw std::invalid_argument("star_apply: operands not deep enough for the expansion order");
  const int max_grade = exp.order;
  if (f.max_grade() > max_grade || g.max_grade() > max_grade)
    throw std::invalid_argument("star_apply: operand grade exceeds the expansion order");

  // Derivative caches per (operand grade, multi-index).
  std::map<std::pair<int, MultiIndex>, Jet> df;
  std::map<std::pair<int, MultiIndex>, Jet> dg;
  auto derivative = [out_order](std::map<std::pair<int, MultiIndex>, Jet>& cache, const HJet& h, int a,
                                const MultiIndex& m) -> const Jet& {
    auto key = std::make_pair(a, m);
    auto it = cache.find(key);
    if (it == cache.end()) {
      const Jet& src = h.grades[static_cast<std::size_t>(a)];
      if (degree(m) + out_order > src.order())
        throw std::invalid_argument("star_apply: derivative exceeds operand order");
      it = cache.emplace(key, src.derive(m).truncated(out_order)).first;
    }
    return it->second;
  };

  HJet out;
  for (int n = 0; n <= max_grade; ++n) out.grades.emplace_back(6, out_order, base);
  Jet tmp(6, out_order, base);
  for (const auto& term : exp.terms) {
    if (term.grade > max_grade) continue;
    const Jet c = embed_coeff(term.coeff, base, out_order);
    for (int a = 0; a <= f.max_grade(); ++a) {
      for (int b = 0; b <= g.max_grade(); ++b) {
        const int n = term.grade + a + b;
        if (n > max_grade) continue;
        const Jet& dL = derivative(df, f, a, term.left);
        const Jet& dR = derivative(dg, g, b, term.right);
        std::fill(tmp.coeffs().begin(), tmp.coeffs().end(), C{});
        tmp.add_product(c, dR);
        out.grades[static_cast<std::size_t>(n)].add_product(tmp, dL);
      }
    }
  }
  return out;
}

std::vector<double> associator_residuals(const StarExpansion& exp, const HJet& f, const HJet& g,
                                         const HJet& h) {
  const HJet left = star_apply(exp, star_apply(exp, f, g), h);
  const HJet right = star_apply(exp, f, star_apply(exp, g, h));
  std::vector<double> res;
  for (std::size_t n = 0; n < left.grades.size(); ++n) {
    const Jet& l = left.grades[n];
    const Jet& r = right.grades[n];
    double m = 0.0;
    const std::size_t size = std::min(l.size(), r.size());
    for (std::size_t k = 0; k < size; ++k) m = std::max(m, std::abs(l.coeffs()[k] - r.coeffs()[k]));
    res.push_back(m);
  }
  return res;
}

PoissonMatrixJet poisson_matrix_jet(const Vec3& x0, const Vec3& p0, const MonopoleConfig& cfg, int order,
                                    bool constant_beta) {
  const auto base = phase_base(x0, p0);
  const JetMatrix3 beta = beta_jet(x0, cfg, order);
  auto zero = [&] { return Jet(6, order, base); };
  PoissonMatrixJet P{{{zero(), zero(), zero(), zero(), zero(), zero()},
                      {zero(), zero(), zero(), zero(), zero(), zero()},
                      {zero(), zero(), zero(), zero(), zero(), zero()},
                      {zero(), zero(), zero(), zero(), zero(), zero()},
                      {zero(), zero(), zero(), zero(), zero(), zero()},
                      {zero(), zero(), zero(), zero(), zero(), zero()}}};
  for (int i = 0; i < 3; ++i) {
    P[i][i + 3] = Jet::constant(6, order, base, 1.0);
    P[i + 3][i] = Jet::constant(6, order, base, -1.0);
    for (int j = 0; j < 3; ++j) {
      const Jet& b = beta[i][j];
      P[i + 3][j + 3] = (constant_beta ? b.frozen() : b).embedded(6, base);
    }
  }
  return P;
}

Jet poisson_bracket(const PoissonMatrixJet& P, const Jet& f, const Jet& g) {
  const int order = std::min(f.order(), g.order()) - 1;
  if (order < 0) throw std::invalid_argument("poisson_bracket: operands of order 0");
  Jet out(6, order, f.base());
  for (int a = 0; a < 6; ++a) {
    const Jet fa = f.derive(a).truncated(order);
    for (int b = 0; b < 6; ++b) {
      if (P[a][b].is_zero()) continue;
      out.add_product(P[a][b].truncated(std::min(order, P[a][b].order())), fa * g.derive(b).truncated(order));
    }
  }
  return out;
}

}  // namespace monopole

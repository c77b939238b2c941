#include "monopole/wpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace monopole {

int degree(const WMonomial& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

std::uint64_t WPoly::key(int grade, const WMonomial& m) {
  std::uint64_t k = static_cast<std::uint64_t>(grade);
  for (auto e : m) {
    if (e > 15) throw std::overflow_error("WPoly: exponent too large");
    k = (k << 4) | e;
  }
  return k;
}

std::pair<int, WMonomial> WPoly::unkey(std::uint64_t k) {
  WMonomial m{};
  for (int i = kWVars - 1; i >= 0; --i) {
    m[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(k & 0xF);
    k >>= 4;
  }
  return {static_cast<int>(k), m};
}

void WPoly::add(int grade, const WMonomial& monomial, const Jet& coeff, Jet::Scalar s) {
  const auto k = key(grade, monomial);
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, s * coeff);
  } else {
    it->second.add_scaled(coeff, s);
  }
}

WPoly& WPoly::operator+=(const WPoly& o) {
  for (const auto& [k, c] : o.terms_) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
    }
  }
  return *this;
}

WPoly& WPoly::operator*=(Jet::Scalar s) {
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

WPoly WPoly::multiply(const WPoly& a, const WPoly& b, int max_grade) {
  WPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    const auto [ga, ma] = unkey(ka);
    for (const auto& [kb, cb] : b.terms_) {
      const auto [gb, mb] = unkey(kb);
      if (ga + gb > max_grade) continue;
      WMonomial m{};
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint8_t>(ma[i] + mb[i]);
      const auto k = key(ga + gb, m);
      auto it = out.terms_.find(k);
      if (it == out.terms_.end()) {
        out.terms_.emplace(k, ca * cb);
      } else {
        it->second.add_product(ca, cb);
      }
    }
  }
  return out;
}

WPoly WPoly::directional(WVar block) const {
  WPoly out;
  for (const auto& [k, c] : terms_) {
    const auto [g, m] = unkey(k);
    for (int i = 0; i < 3; ++i) {
      const Jet d = c.derive(i);
      if (d.is_zero()) continue;
      WMonomial mi = m;
      ++mi[static_cast<std::size_t>(wvar(block, i))];
      out.add(g + 1, mi, d);
    }
  }
  return out;
}

WPoly WPoly::grade_part(int grade) const {
  WPoly out;
  for (const auto& [k, c] : terms_)
    if (unkey(k).first == grade) out.terms_.emplace(k, c);
  return out;
}

void WPoly::prune() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

int WPoly::max_grade() const {
  int g = -1;
  for (const auto& [k, c] : terms_) g = std::max(g, unkey(k).first);
  return g;
}

std::vector<WPoly::Term> WPoly::terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) {
    const auto [g, m] = unkey(k);
    out.push_back({g, m, c});
  }
  return out;
}

const Jet* WPoly::find(int grade, const WMonomial& monomial) const {
  auto it = terms_.find(key(grade, monomial));
  return it == terms_.end() ? nullptr : &it->second;
}

double WPoly::max_difference(const WPoly& a, const WPoly& b) {
  double m = 0.0;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
      m = std::max(m, ia->second.max_abs());
      ++ia;
    } else if (ia == a.terms_.end() || ib->first < ia->first) {
      m = std::max(m, ib->second.max_abs());
      ++ib;
    } else {
      const Jet& x = ia->second;
      const Jet& y = ib->second;
      const std::size_t n = std::min(x.size(), y.size());
      for (std::size_t k = 0; k < n; ++k) m = std::max(m, std::abs(x.coeffs()[k] - y.coeffs()[k]));
      ++ia;
      ++ib;
    }
  }
  return m;
}

WPoly operator+(WPoly a, const WPoly& b) { return a += b; }
WPoly operator*(Jet::Scalar s, WPoly a) { return a *= s; }

WPoly graded_exp(const WPoly& exponent, int max_grade) {
  if (exponent.empty()) throw std::invalid_argument("graded_exp: empty exponent (base point unknown)");
  for (const auto& t : exponent.terms())
    if (t.grade < 1) throw std::invalid_argument("graded_exp: exponent must have positive grades");
  const Jet& any = exponent.terms().front().coeff;
  WPoly out;
  WPoly power;
  power.add(0, WMonomial{}, Jet::constant(3, any.order(), any.base(), 1.0));
  out += power;
  for (int m = 1; m <= max_grade; ++m) {
    power = WPoly::multiply(power, exponent, max_grade);
    power *= 1.0 / m;
    if (power.empty()) break;
    out += power;
  }
  return out;
}

}  // namespace monopole

#include "monopole/jet.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include <fmt/format.h>

#include "monopole/errors.hpp"

namespace monopole {

int degree(const MultiIndex& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex c{};
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<std::uint8_t>(a[i] + b[i]);
  return c;
}

MultiIndex unit_index(int var) {
  MultiIndex m{};
  m[static_cast<std::size_t>(var)] = 1;
  return m;
}

double factorial(const MultiIndex& m) {
  double f = 1.0;
  for (auto e : m)
    for (int k = 2; k <= e; ++k) f *= k;
  return f;
}

namespace {

std::uint32_t pack(const MultiIndex& m) {
  std::uint32_t key = 0;
  for (auto e : m) key = (key << 4) | e;
  return key;
}

// Monomials of exact degree d in `vars` variables, lexicographically
// descending in the exponent vector.
void append_degree(int vars, int d, std::vector<MultiIndex>& out) {
  MultiIndex m{};
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == vars - 1) {
      m[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(left);
      out.push_back(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(e);
      self(self, var + 1, left - e);
    }
    m[static_cast<std::size_t>(var)] = 0;
  };
  rec(rec, 0, d);
}

}  // namespace

JetLayout::JetLayout(int vars, int order) : vars_(vars), order_(order) {
  if (vars < 1 || vars > kMaxJetVars) throw std::invalid_argument("JetLayout: vars out of range");
  if (order < 0 || order > 15) throw std::invalid_argument("JetLayout: order out of range");
  for (int d = 0; d <= order; ++d) {
    append_degree(vars, d, monomials_);
    prefix_.push_back(monomials_.size());
  }
  degrees_.reserve(monomials_.size());
  lookup_.reserve(monomials_.size());
  for (std::size_t k = 0; k < monomials_.size(); ++k) {
    degrees_.push_back(degree(monomials_[k]));
    lookup_.emplace_back(pack(monomials_[k]), static_cast<std::uint32_t>(k));
  }
  std::sort(lookup_.begin(), lookup_.end());
}

std::shared_ptr<const JetLayout> JetLayout::get(int vars, int order) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const JetLayout>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{vars, order}];
  if (!slot) slot = std::make_shared<const JetLayout>(vars, order);
  return slot;
}

std::size_t JetLayout::prefix(int d) const {
  if (d < 0) return 0;
  return prefix_[static_cast<std::size_t>(std::min(d, order_))];
}

std::optional<std::size_t> JetLayout::find(const MultiIndex& m) const {
  for (std::size_t i = static_cast<std::size_t>(vars_); i < m.size(); ++i)
    if (m[i] != 0) return std::nullopt;
  if (degree(m) > order_) return std::nullopt;
  const std::uint32_t key = pack(m);
  auto it = std::lower_bound(lookup_.begin(), lookup_.end(), std::make_pair(key, 0u));
  if (it == lookup_.end() || it->first != key) return std::nullopt;
  return it->second;
}

const JetLayout::ProductTable& JetLayout::product_table() const {
  std::call_once(product_once_, [this] {
    product_.row_start.reserve(size() + 1);
    for (std::size_t i = 0; i < size(); ++i) {
      product_.row_start.push_back(static_cast<std::uint32_t>(product_.col.size()));
      const std::size_t n = prefix(order_ - degrees_[i]);
      for (std::size_t j = 0; j < n; ++j) {
        product_.col.push_back(static_cast<std::uint32_t>(j));
        product_.target.push_back(static_cast<std::uint32_t>(*find(monomials_[i] + monomials_[j])));
      }
    }
    product_.row_start.push_back(static_cast<std::uint32_t>(product_.col.size()));
  });
  return product_;
}

const std::vector<std::pair<std::uint32_t, double>>& JetLayout::derivative_table(int var) const {
  const auto v = static_cast<std::size_t>(var);
  std::call_once(derivative_once_[v], [this, v] {
    const std::size_t n = prefix(order_ - 1);
    auto& table = derivative_[v];
    table.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      MultiIndex m = monomials_[k];
      const double factor = m[v] + 1.0;
      m[v] += 1;
      table.emplace_back(static_cast<std::uint32_t>(*find(m)), factor);
    }
  });
  return derivative_[v];
}

// ---------------------------------------------------------------------------

Jet::Jet(int vars, int order, std::vector<double> base)
    : layout_(JetLayout::get(vars, order)), base_(std::move(base)) {
  if (base_.size() != static_cast<std::size_t>(vars))
    throw std::invalid_argument("Jet: base point dimension mismatch");
  coeffs_.assign(layout_->size(), Scalar{});
}

Jet Jet::constant(int vars, int order, std::vector<double> base, Scalar value) {
  Jet j(vars, order, std::move(base));
  j.coeffs_[0] = value;
  return j;
}

Jet Jet::variable(int vars, int order, std::vector<double> base, int var) {
  if (var < 0 || var >= vars) throw std::invalid_argument("Jet::variable: index out of range");
  Jet j(vars, order, std::move(base));
  j.coeffs_[0] = j.base_[static_cast<std::size_t>(var)];
  if (order >= 1) j.set_coeff(unit_index(var), 1.0);
  return j;
}

Jet::Scalar Jet::coeff(const MultiIndex& m) const {
  auto k = layout_->find(m);
  return k ? coeffs_[*k] : Scalar{};
}

void Jet::set_coeff(const MultiIndex& m, Scalar value) {
  auto k = layout_->find(m);
  if (!k) throw std::out_of_range("Jet::set_coeff: multi-index outside the layout");
  coeffs_[*k] = value;
}

void Jet::require_compatible(const Jet& o, const char* who) const {
  if (o.vars() != vars())
    throw std::invalid_argument(fmt::format("{}: variable count mismatch ({} vs {})", who,
                                            vars(), o.vars()));
  if (o.base_ != base_) throw std::invalid_argument(fmt::format("{}: base point mismatch", who));
}

Jet& Jet::operator+=(const Jet& o) {
  add_scaled(o, 1.0);
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  add_scaled(o, -1.0);
  return *this;
}

Jet& Jet::operator*=(Scalar s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

void Jet::add_scaled(const Jet& o, Scalar s) {
  require_compatible(o, "Jet add");
  if (o.order() < order()) *this = truncated(o.order());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += s * o.coeffs_[k];
}

void Jet::add_product(const Jet& a, const Jet& b, Scalar s) {
  require_compatible(a, "Jet multiply");
  require_compatible(b, "Jet multiply");
  const int n = std::min({order(), a.order(), b.order()});
  if (n < order()) *this = truncated(n);
  const auto& table = layout_->product_table();
  // The table of this layout indexes correctly into the (longer) operands.
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Scalar ai = a.coeffs_[i];
    if (ai == Scalar{}) continue;
    const Scalar f = s * ai;
    for (auto e = table.row_start[i]; e < table.row_start[i + 1]; ++e)
      coeffs_[table.target[e]] += f * b.coeffs_[table.col[e]];
  }
}

Jet& Jet::operator*=(const Jet& o) {
  Jet out(vars(), std::min(order(), o.order()), base_);
  out.add_product(*this, o);
  return *this = std::move(out);
}

Jet Jet::derive(int var) const {
  if (var < 0 || var >= vars()) throw std::invalid_argument("Jet::derive: variable out of range");
  if (order() == 0) return Jet(vars(), 0, base_);
  Jet out(vars(), order() - 1, base_);
  const auto& table = layout_->derivative_table(var);
  for (std::size_t k = 0; k < out.coeffs_.size(); ++k)
    out.coeffs_[k] = table[k].second * coeffs_[table[k].first];
  return out;
}

Jet Jet::derive(const MultiIndex& m) const {
  const int d = degree(m);
  if (d == 0) return *this;
  if (d > order()) return Jet(vars(), 0, base_);  // nothing known; zero of order 0
  // Direct formula: coefficient of x^b in d^m f is c_{b+m} (b+m)!/b!.
  Jet out(vars(), order() - d, base_);
  for (std::size_t k = 0; k < out.coeffs_.size(); ++k) {
    const MultiIndex& b = out.layout_->monomial(k);
    const MultiIndex bm = b + m;
    auto src = layout_->find(bm);
    if (!src) throw std::invalid_argument("Jet::derive: multi-index uses missing variables");
    double f = 1.0;
    for (std::size_t v = 0; v < m.size(); ++v)
      for (int t = 0; t < m[v]; ++t) f *= (b[v] + 1 + t);
    out.coeffs_[k] = f * coeffs_[*src];
  }
  return out;
}

Jet::Scalar Jet::eval(std::span<const double> point) const {
  if (point.size() != base_.size()) throw std::invalid_argument("Jet::eval: dimension mismatch");
  const int n = vars();
  std::vector<double> dx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    dx[static_cast<std::size_t>(i)] = point[static_cast<std::size_t>(i)] - base_[static_cast<std::size_t>(i)];
  Scalar sum{};
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == Scalar{}) continue;
    double mono = 1.0;
    const MultiIndex& m = layout_->monomial(k);
    for (int i = 0; i < n; ++i)
      for (int e = 0; e < m[static_cast<std::size_t>(i)]; ++e) mono *= dx[static_cast<std::size_t>(i)];
    sum += coeffs_[k] * mono;
  }
  return sum;
}

Jet Jet::truncated(int order_) const {
  if (order_ > order()) throw std::invalid_argument("Jet::truncated: cannot raise the order");
  Jet out(vars(), order_, base_);
  std::copy_n(coeffs_.begin(), out.coeffs_.size(), out.coeffs_.begin());
  return out;
}

Jet Jet::shifted(std::span<const double> new_base) const {
  std::vector<double> nb(new_base.begin(), new_base.end());
  Jet out(vars(), order(), nb);
  for (std::size_t k = 0; k < out.coeffs_.size(); ++k) {
    const MultiIndex& m = layout_->monomial(k);
    out.coeffs_[k] = derive(m).eval(nb) / factorial(m);
  }
  return out;
}

Jet Jet::embedded(int new_vars, std::span<const double> new_base) const {
  if (new_vars < vars()) throw std::invalid_argument("Jet::embedded: fewer variables");
  if (new_base.size() != static_cast<std::size_t>(new_vars))
    throw std::invalid_argument("Jet::embedded: base dimension mismatch");
  for (int i = 0; i < vars(); ++i)
    if (new_base[static_cast<std::size_t>(i)] != base_[static_cast<std::size_t>(i)])
      throw std::invalid_argument("Jet::embedded: base point does not extend the jet's base");
  Jet out(new_vars, order(), std::vector<double>(new_base.begin(), new_base.end()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    out.coeffs_[*out.layout_->find(layout_->monomial(k))] = coeffs_[k];
  return out;
}

Jet Jet::restricted(int new_vars, double tol) const {
  if (new_vars > vars()) throw std::invalid_argument("Jet::restricted: more variables");
  Jet out(new_vars, order(), std::vector<double>(base_.begin(), base_.begin() + new_vars));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const MultiIndex& m = layout_->monomial(k);
    auto dst = out.layout_->find(m);
    if (dst) {
      out.coeffs_[*dst] = coeffs_[k];
    } else if (std::abs(coeffs_[k]) > tol) {
      throw std::invalid_argument("Jet::restricted: jet depends on a dropped variable");
    }
  }
  return out;
}

Jet Jet::frozen() const { return constant(vars(), order(), base_, coeffs_[0]); }

double Jet::max_abs() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

bool Jet::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c == Scalar{}; });
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }
Jet operator*(const Jet& a, const Jet& b) {
  Jet out(a.vars(), std::min(a.order(), b.order()), a.base());
  out.add_product(a, b);
  return out;
}
Jet operator*(Jet::Scalar s, Jet a) { return a *= s; }
Jet operator*(Jet a, Jet::Scalar s) { return a *= s; }

// ---------------------------------------------------------------------------

std::vector<Jet::Scalar> taylor_power(double t0, double s, int n) {
  const bool nonneg_integer = s >= 0.0 && std::floor(s) == s;
  if (t0 == 0.0 && !nonneg_integer)
    throw DomainError("taylor_power: expansion of a negative or fractional power at 0");
  if (t0 < 0.0 && !(std::floor(s) == s))
    throw DomainError("taylor_power: fractional power of a negative number");
  std::vector<Jet::Scalar> c(static_cast<std::size_t>(n + 1));
  double binom = 1.0;  // binom(s, k)
  for (int k = 0; k <= n; ++k) {
    c[static_cast<std::size_t>(k)] = binom * std::pow(t0, s - k);
    if (t0 == 0.0) c[static_cast<std::size_t>(k)] = (k == static_cast<int>(s)) ? binom : 0.0;
    binom *= (s - k) / (k + 1.0);
  }
  return c;
}

std::vector<Jet::Scalar> taylor_exp(Jet::Scalar t0, int n) {
  std::vector<Jet::Scalar> c(static_cast<std::size_t>(n + 1));
  Jet::Scalar v = std::exp(t0);
  for (int k = 0; k <= n; ++k) {
    c[static_cast<std::size_t>(k)] = v;
    v /= (k + 1.0);
  }
  return c;
}

Jet compose_univariate(std::span<const Jet::Scalar> outer, const Jet& inner) {
  if (outer.empty()) throw std::invalid_argument("compose_univariate: no outer coefficients");
  Jet delta = inner;
  delta.coeffs()[0] = 0.0;
  // Horner: (((c_n) d + c_{n-1}) d + ...) + c_0
  const std::size_t n = std::min(outer.size(), static_cast<std::size_t>(inner.order() + 1));
  Jet acc = Jet::constant(inner.vars(), inner.order(), inner.base(), outer[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;) {
    acc = acc * delta;
    acc.coeffs()[0] += outer[k];
  }
  return acc;
}

Jet pow(const Jet& inner, double s) {
  const Jet::Scalar t0 = inner.value();
  if (t0.imag() != 0.0) throw DomainError("pow: complex constant term");
  return compose_univariate(taylor_power(t0.real(), s, inner.order()), inner);
}

Jet exp(const Jet& inner) { return compose_univariate(taylor_exp(inner.value(), inner.order()), inner); }

}  // namespace monopole

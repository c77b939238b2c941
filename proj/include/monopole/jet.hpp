#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

namespace monopole {

inline constexpr int kMaxJetVars = 6;

/// Exponent vector; entries past the jet's variable count are zero.
using MultiIndex = std::array<std::uint8_t, kMaxJetVars>;

int degree(const MultiIndex& m);
MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
MultiIndex unit_index(int var);
/// prod_i m_i!
double factorial(const MultiIndex& m);

/// Monomial basis of polynomials in `vars` variables of degree <= `order`,
/// graded and lexicographic within a degree. The basis of a lower order is
/// a prefix of the basis of a higher one, so truncation is a resize.
class JetLayout {
 public:
  static std::shared_ptr<const JetLayout> get(int vars, int order);

  int vars() const { return vars_; }
  int order() const { return order_; }
  std::size_t size() const { return monomials_.size(); }
  const MultiIndex& monomial(std::size_t k) const { return monomials_[k]; }
  int degree_of(std::size_t k) const { return degrees_[k]; }
  /// Number of monomials of degree <= d.
  std::size_t prefix(int d) const;
  std::optional<std::size_t> find(const MultiIndex& m) const;

  /// Product table in CSR form: for row i, entries (j, k) with
  /// monomial(i) + monomial(j) = monomial(k).
  struct ProductTable {
    std::vector<std::uint32_t> row_start;
    std::vector<std::uint32_t> col;
    std::vector<std::uint32_t> target;
  };
  const ProductTable& product_table() const;

  /// For d/dx_var: entries (source index in this layout, factor) for each
  /// monomial of the order-1 layout.
  const std::vector<std::pair<std::uint32_t, double>>& derivative_table(int var) const;

  JetLayout(int vars, int order);

 private:
  int vars_;
  int order_;
  std::vector<MultiIndex> monomials_;
  std::vector<int> degrees_;
  std::vector<std::size_t> prefix_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> lookup_;  // sorted (key, index)

  mutable std::once_flag product_once_;
  mutable ProductTable product_;
  mutable std::array<std::once_flag, kMaxJetVars> derivative_once_;
  mutable std::array<std::vector<std::pair<std::uint32_t, double>>, kMaxJetVars> derivative_;
};

/// Truncated Taylor polynomial sum_m c_m (x - base)^m, |m| <= order, with
/// complex coefficients.
class Jet {
 public:
  using Scalar = std::complex<double>;

  Jet(int vars, int order, std::vector<double> base);

  static Jet constant(int vars, int order, std::vector<double> base, Scalar value);
  /// The coordinate function x_var expanded at base.
  static Jet variable(int vars, int order, std::vector<double> base, int var);

  int vars() const { return layout_->vars(); }
  int order() const { return layout_->order(); }
  const JetLayout& layout() const { return *layout_; }
  const std::vector<double>& base() const { return base_; }
  std::size_t size() const { return coeffs_.size(); }

  std::span<const Scalar> coeffs() const { return coeffs_; }
  std::span<Scalar> coeffs() { return coeffs_; }
  Scalar coeff(const MultiIndex& m) const;
  void set_coeff(const MultiIndex& m, Scalar value);
  Scalar value() const { return coeffs_[0]; }

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(Scalar s);
  Jet& operator*=(const Jet& o);
  /// this += s * o
  void add_scaled(const Jet& o, Scalar s);
  /// this += a * b (truncated to this->order()).
  void add_product(const Jet& a, const Jet& b, Scalar s = 1.0);

  Jet derive(int var) const;
  Jet derive(const MultiIndex& m) const;
  Scalar eval(std::span<const double> point) const;
  Jet truncated(int order) const;
  /// Re-expansion of the polynomial at another base point (exact).
  Jet shifted(std::span<const double> new_base) const;
  /// Same function of the first vars() coordinates, seen as a jet in new_vars
  /// variables; new_base extends base().
  Jet embedded(int new_vars, std::span<const double> new_base) const;
  /// Inverse of embedded: keeps only the first new_vars variables. Throws if a
  /// coefficient depending on a dropped variable exceeds tol in magnitude.
  Jet restricted(int new_vars, double tol = 0.0) const;
  /// Zeroes every coefficient of degree >= 1.
  Jet frozen() const;

  double max_abs() const;
  bool is_zero() const;

 private:
  std::shared_ptr<const JetLayout> layout_;
  std::vector<double> base_;
  std::vector<Scalar> coeffs_;

  void require_compatible(const Jet& o, const char* who) const;
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
Jet operator*(Jet::Scalar s, Jet a);
Jet operator*(Jet a, Jet::Scalar s);

/// Taylor coefficients of t^s at t0 (k = 0..n).
std::vector<Jet::Scalar> taylor_power(double t0, double s, int n);
/// Taylor coefficients of exp(t) at t0.
std::vector<Jet::Scalar> taylor_exp(Jet::Scalar t0, int n);

/// sum_k outer[k] (inner - inner.value())^k, outer given as Taylor
/// coefficients at inner.value().
Jet compose_univariate(std::span<const Jet::Scalar> outer, const Jet& inner);
/// inner^s for real s; inner must have a real positive constant term unless
/// s is a nonnegative integer.
Jet pow(const Jet& inner, double s);
Jet exp(const Jet& inner);

/// Jet-valued series in hbar; grades[k] multiplies hbar^k. All grades share
/// base point and order.
struct HJet {
  std::vector<Jet> grades;

  int max_grade() const { return static_cast<int>(grades.size()) - 1; }
  int order() const { return grades.front().order(); }
  const std::vector<double>& base() const { return grades.front().base(); }

  static HJet classical(Jet j) { return HJet{{std::move(j)}}; }
};

}  // namespace monopole

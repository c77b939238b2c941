#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "monopole/jet.hpp"

namespace monopole {

/// Formal variables w = (u, v), w' = (u', v'), three components each.
enum class WVar : int { U = 0, V = 3, Uprime = 6, Vprime = 9 };

inline constexpr int kWVars = 12;
using WMonomial = std::array<std::uint8_t, kWVars>;

inline int wvar(WVar block, int component) { return static_cast<int>(block) + component; }
int degree(const WMonomial& m);

/// Polynomial in the twelve formal variables whose coefficients are x-jets,
/// each term carrying its own hbar grade.
class WPoly {
 public:
  struct Term {
    int grade;
    WMonomial monomial;
    const Jet& coeff;
  };

  WPoly() = default;

  /// Adds s * coeff to the term (grade, monomial).
  void add(int grade, const WMonomial& monomial, const Jet& coeff, Jet::Scalar s = 1.0);
  WPoly& operator+=(const WPoly& o);
  WPoly& operator*=(Jet::Scalar s);

  /// Product truncated at max_grade.
  static WPoly multiply(const WPoly& a, const WPoly& b, int max_grade);

  /// (u . d_x) or (u' . d_x) applied to every coefficient; raises the grade by 1.
  WPoly directional(WVar block) const;

  /// Terms of the given grade only.
  WPoly grade_part(int grade) const;
  /// Drops terms whose coefficients are all zero.
  void prune();

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  int max_grade() const;
  std::vector<Term> terms() const;
  const Jet* find(int grade, const WMonomial& monomial) const;

  /// Largest coefficient difference over the union of terms, compared on the
  /// common jet order.
  static double max_difference(const WPoly& a, const WPoly& b);

 private:
  static std::uint64_t key(int grade, const WMonomial& m);
  static std::pair<int, WMonomial> unkey(std::uint64_t k);
  std::map<std::uint64_t, Jet> terms_;
};

WPoly operator+(WPoly a, const WPoly& b);
WPoly operator*(Jet::Scalar s, WPoly a);

/// sum_{m <= max_grade} E^m / m!, products truncated at max_grade.
WPoly graded_exp(const WPoly& exponent, int max_grade);

}  // namespace monopole

#pragma once

#include <optional>

namespace monopole {

/// Exclusion zones of the configuration space R^3 \ {0}.
struct Exclusion {
  double r_min = 1e-6;       // radius of the ball around the origin
  double string_eps = 1e-4;  // transverse radius around a chart's string
};

/// Charge data of the charge-monopole system. Only the product e*g and the
/// Planck constant ever enter; the quantized constructor pins eg = n*hbar/2.
class MonopoleConfig {
 public:
  static MonopoleConfig quantized(int n, double hbar = 1.0, Exclusion excl = {});

  /// Arbitrary eg; used for negative tests of the cocycle identity.
  static MonopoleConfig unquantized(double eg, double hbar = 1.0, Exclusion excl = {});

  double eg() const { return eg_; }
  double hbar() const { return hbar_; }
  bool is_quantized() const { return n_.has_value(); }
  std::optional<int> n() const { return n_; }
  const Exclusion& exclusion() const { return excl_; }

  MonopoleConfig with_exclusion(Exclusion excl) const {
    MonopoleConfig c = *this;
    c.excl_ = excl;
    return c;
  }

 private:
  MonopoleConfig(std::optional<int> n, double eg, double hbar, Exclusion excl)
      : n_(n), eg_(eg), hbar_(hbar), excl_(excl) {}

  std::optional<int> n_;
  double eg_;
  double hbar_;
  Exclusion excl_;
};

}  // namespace monopole

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace monopole {

/// Flags shared by the verification suites. Unset optionals take the
/// per-check defaults.
struct CheckParams {
  std::optional<int> n;
  std::optional<double> eg;  // raw e*g; switches to the unquantized configuration
  double hbar = 1.0;
  std::optional<double> t;
  int order = 3;
  std::optional<int> trials;
  std::uint64_t seed = 1;
  std::optional<double> tol;
  int steps = 4096;
  int nodes = 64;
  double rmin = 1e-6;
  bool constant_beta = false;
};

struct CheckReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::pair<std::string, double>> residuals;
  double tolerance = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
  double wall_time = 0.0;  // seconds
};

const std::vector<std::string>& check_names();

/// Runs one named suite. Unknown names and invalid flags throw
/// std::invalid_argument; DomainError propagates.
CheckReport run_check(const std::string& name, const CheckParams& params);

}  // namespace monopole

#pragma once

#include <vector>

namespace monopole {

struct QuadratureRule {
  std::vector<double> nodes;    // on [0, 1]
  std::vector<double> weights;  // sum to 1
};

/// Gauss-Legendre rule with n points mapped to [0, 1]. Rules are computed
/// once per n and cached; the returned reference stays valid.
const QuadratureRule& gauss_legendre(int n);

}  // namespace monopole

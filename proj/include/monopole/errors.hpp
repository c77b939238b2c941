#pragma once

#include <stdexcept>
#include <string>

namespace monopole {

/// Raised when an input leaves the configuration space: the origin ball,
/// a chart's Dirac string, an inadmissible triangle or path.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace monopole

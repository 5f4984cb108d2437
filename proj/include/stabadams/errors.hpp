#pragma once

#include <stdexcept>
#include <string>

namespace stabadams {

/// sigma(zeta) vanished where a value of mu = rho/sigma was requested.
struct PoleError : std::runtime_error {
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

/// Leading coefficient of a characteristic polynomial vanished.
struct DegenerateError : std::runtime_error {
  explicit DegenerateError(const std::string& what) : std::runtime_error(what) {}
};

/// Coefficients do not satisfy the order conditions required by the operation.
struct OrderViolation : std::runtime_error {
  explicit OrderViolation(const std::string& what) : std::runtime_error(what) {}
};

/// A problem has no reference-solution provider.
struct ReferenceUnavailable : std::runtime_error {
  explicit ReferenceUnavailable(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stabadams

#pragma once

#include <stdexcept>
#include <string>

namespace eprsim {

/// Bad run parameters: unknown model id, invalid grid, malformed option values.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical failure: non-finite integrand values or a quadrature residual
/// above the requested tolerance. Carries the residual estimate when known.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what, double residual = 0.0)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Internal consistency violation, e.g. an operator square whose contexts
/// fail to commute or whose products are not proportional to the identity.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed data crossing a module boundary, e.g. channel probabilities
/// that do not sum to one.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eprsim

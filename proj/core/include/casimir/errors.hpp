#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Invalid argument or violated precondition (negative p, a <= 0, bad grid, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Adaptive quadrature did not reach the requested tolerance.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  /// Error estimate actually achieved when the integrator gave up.
  [[nodiscard]] double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// A lattice sum could not be certified (remainder bound unavailable or too large).
class TailBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Spectral density requested exactly on a Heaviside step while thresholds are rejected.
class ThresholdError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace casimir

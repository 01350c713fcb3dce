#pragma once

#include <stdexcept>
#include <string>

namespace nikitin {

/// Input outside the mathematical domain of an operation (poles, x <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical procedure failed to reach its target accuracy.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  /// Best residual (relative) the procedure achieved before giving up.
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// An exponent exceeded the admissible range; see model::kMaxExponent.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A linear system or eigenproblem degenerated (zero Wronskian, coalescing roots).
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration: unknown axis, bad tolerance, malformed JSON field.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace nikitin

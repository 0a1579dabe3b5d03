#pragma once

#include <stdexcept>
#include <string>

namespace contspec {

/// Adaptive quadrature ran out of subdivisions with the error estimate
/// still above the requested tolerance. Carries the best estimate so far.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, double value, double error)
      : std::runtime_error(what), value_(value), error_(error) {}
  double value() const noexcept { return value_; }
  double error() const noexcept { return error_; }

 private:
  double value_;
  double error_;
};

/// The numeric action map failed its monotonicity certificate, so it
/// cannot be inverted by bracketing.
class NotMonotone : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested action value lies outside the range of the action map.
class OutOfRange : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A quantity is ill-defined at the requested parameter point (e.g. a
/// normalization evaluated at a degenerate label).
class OutOfDomain : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace contspec

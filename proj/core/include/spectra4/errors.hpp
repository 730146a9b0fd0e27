#pragma once

#include <stdexcept>
#include <string>

namespace spectra4 {

/// Malformed or out-of-range problem configuration.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Requested derivative (or expansion order) exceeds the declared smoothness.
struct UnsupportedDerivative : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Quadrature failed to reach the requested accuracy.
struct AccuracyError : std::runtime_error {
  double achieved;
  AccuracyError(const std::string& what, double achieved_estimate)
      : std::runtime_error(what), achieved(achieved_estimate) {}
};

/// Adaptive step size underflowed before reaching x = 1.
struct IntegrationFailure : std::runtime_error {
  double reached_x;
  IntegrationFailure(const std::string& what, double x)
      : std::runtime_error(what), reached_x(x) {}
};

/// A winding-number contour passed too close to a zero of D.
struct ContourTooClose : std::runtime_error {
  double min_mantissa;
  ContourTooClose(const std::string& what, double m)
      : std::runtime_error(what), min_mantissa(m) {}
};

/// Sign-change roots and the argument-principle count disagree.
struct CountMismatch : std::runtime_error {
  int expected;
  int found;
  CountMismatch(const std::string& what, int expected_count, int found_count)
      : std::runtime_error(what), expected(expected_count), found(found_count) {}
};

}  // namespace spectra4

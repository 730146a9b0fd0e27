#pragma once

#include <array>
#include <complex>

#include "spectra4/coefficients.hpp"
#include "spectra4/errors.hpp"

namespace spectra4 {

/// Floating scalar used for the integration: plain double, or the platform's
/// extended type (long double) when root residuals push double to its limit.
enum class Precision { kDouble, kExtended };

/// 4x4 complex matrix as mantissa * exp(log_scale). The mantissa's largest
/// entry is kept within [1, e^20] by renormalization during integration.
struct ScaledTransferMatrix {
  std::array<std::complex<double>, 16> mantissa{};
  double log_scale = 0.0;

  std::complex<double>& at(int row, int col) { return mantissa[4 * row + col]; }
  const std::complex<double>& at(int row, int col) const {
    return mantissa[4 * row + col];
  }

  static ScaledTransferMatrix identity();

  /// det(mantissa), by direct cofactor expansion.
  std::complex<double> mantissa_det() const;
};

/// Integrates A' = P(x) A, A(0) = I, across [0, 1] for the first-order form
/// of the quartic equation with quasi-derivative fourth row
/// (y, y', y'', y''' + p y'). Returns A(1, lambda) in scaled form.
///
/// Pure function of its arguments; calls at distinct lambda may run
/// concurrently.
ScaledTransferMatrix integrate_fundamental(const PeriodicCoefficient& p,
                                           const PeriodicCoefficient& q,
                                           std::complex<double> lambda,
                                           double tolerance,
                                           Precision precision = Precision::kDouble);

/// |det A(1) * e^{4 log_scale} - 1|; zero trace of the system matrix makes
/// the true determinant constant along the integration.
double wronskian_drift(const ScaledTransferMatrix& result);

}  // namespace spectra4

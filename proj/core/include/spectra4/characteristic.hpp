#pragma once

#include <complex>

#include "spectra4/coefficients.hpp"
#include "spectra4/ode_core.hpp"

namespace spectra4 {

/// Value of the characteristic function in scaled form:
/// D(lambda) = mantissa * exp(log_scale), |mantissa| in (0, 1].
struct CharValue {
  std::complex<double> mantissa;
  double log_scale = 0.0;

  std::complex<double> value() const { return mantissa * std::exp(log_scale); }
};

/// Principal quartic root z = lambda^{1/4} with arg z in (-pi/4, pi/4].
std::complex<double> z_of_lambda(std::complex<double> lambda);

std::complex<double> lambda_of_z(std::complex<double> z);

/// D(lambda) for the zero-coefficient problem: -cos(z) cosh(z), z = lambda^{1/4}.
std::complex<double> char_det_unperturbed(std::complex<double> lambda);

/// Same, but in scaled form so it stays representable for large |z|.
CharValue char_det_unperturbed_scaled(std::complex<double> lambda);

/// D(lambda) = -(A11 A33 - A13 A31)(1, lambda), read off an already computed
/// transfer matrix. Cancels catastrophically for Re z beyond ~35; prefer
/// char_det, which propagates the 2x2 minors directly.
CharValue char_det_from_matrix(const ScaledTransferMatrix& A);

/// D(lambda) by integrating the six 2x2 minors of the fundamental system
/// (second compound). Immune to the e^{2z}-vs-e^{z} cancellation of the
/// product formula, so it holds relative accuracy uniformly in |z|.
CharValue char_det(const PeriodicCoefficient& p, const PeriodicCoefficient& q,
                   std::complex<double> lambda, double tolerance,
                   Precision precision = Precision::kDouble);

}  // namespace spectra4

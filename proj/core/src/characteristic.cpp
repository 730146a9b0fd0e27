#include "spectra4/characteristic.hpp"

#include <cmath>

#include "spectra4/detail/rk78.hpp"

namespace spectra4 {

std::complex<double> z_of_lambda(std::complex<double> lambda) {
  if (lambda == 0.0) return 0.0;
  // arg(lambda) in (-pi, pi] makes arg(z) land in (-pi/4, pi/4].
  return std::pow(lambda, 0.25);
}

std::complex<double> lambda_of_z(std::complex<double> z) {
  const std::complex<double> z2 = z * z;
  return z2 * z2;
}

std::complex<double> char_det_unperturbed(std::complex<double> lambda) {
  const std::complex<double> z = z_of_lambda(lambda);
  return -std::cos(z) * std::cosh(z);
}

CharValue char_det_unperturbed_scaled(std::complex<double> lambda) {
  const std::complex<double> z = z_of_lambda(lambda);
  // Factor the dominant exponential out of each half-sum explicitly.
  const double s1 = std::abs(z.imag());
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> m1 =
      0.5 * (std::exp(i * z - s1) + std::exp(-i * z - s1));
  const double s2 = std::abs(z.real());
  const std::complex<double> m2 =
      0.5 * (std::exp(z - s2) + std::exp(-z - s2));
  CharValue v;
  v.mantissa = -m1 * m2;
  v.log_scale = s1 + s2;
  const double mag = std::abs(v.mantissa);
  if (mag > 1.0) {
    v.mantissa /= mag;
    v.log_scale += std::log(mag);
  }
  return v;
}

CharValue char_det_from_matrix(const ScaledTransferMatrix& A) {
  CharValue v;
  v.mantissa = -(A.at(0, 0) * A.at(2, 2) - A.at(0, 2) * A.at(2, 0));
  v.log_scale = 2.0 * A.log_scale;
  const double mag = std::abs(v.mantissa);
  if (mag > 1.0) {
    v.mantissa /= mag;
    v.log_scale += std::log(mag);
  }
  return v;
}

namespace {

// Second-compound propagation: the six 2x2 minors w_ij of the columns
// (phi_1, phi_3) in the quasi-derivative frame, state order
// (w12, w13, w14, w23, w24, w34). D(lambda) = -w13(1). This avoids the
// e^{2z}-against-e^{z} cancellation of forming minors from the full matrix.
template <class R>
CharValue char_det_impl(const PeriodicCoefficient& p,
                        const PeriodicCoefficient& q,
                        std::complex<double> lambda, double tolerance) {
  using C = std::complex<R>;
  const C lam(static_cast<R>(lambda.real()), static_cast<R>(lambda.imag()));

  auto rhs = [&](R x, const std::array<C, 6>& w, std::array<C, 6>& dw) {
    const R px = p.eval_at<R>(x);
    const C s = lam - q.eval_at<R>(x);
    dw[0] = w[1];                       // w12' = w13
    dw[1] = -px * w[0] + w[2] + w[3];   // w13' = -p w12 + w14 + w23
    dw[2] = w[4];                       // w14' = w24
    dw[3] = w[4];                       // w23' = w24
    dw[4] = -s * w[0] + w[5];           // w24' = -s w12 + w34
    dw[5] = -s * w[1] - px * w[4];      // w34' = -s w13 - p w24
  };

  std::array<C, 6> w0{};
  w0[1] = C(1);  // phi_1 = e1, phi_3 = e3 at x = 0, so only w13 = 1.

  const double z_abs = std::abs(z_of_lambda(lambda));
  const double h_cap = 0.25 / (1.0 + z_abs);
  auto state = detail::integrate_scaled<R, 6>(rhs, w0, tolerance, h_cap);

  R mx = 0;
  for (const C& v : state.y) mx = std::max(mx, std::abs(v));
  CharValue out;
  if (mx == 0) {
    out.mantissa = 0.0;
    out.log_scale = state.log_scale;
    return out;
  }
  const C m = -state.y[1] / mx;
  out.mantissa = {static_cast<double>(m.real()),
                  static_cast<double>(m.imag())};
  out.log_scale = state.log_scale + static_cast<double>(std::log(mx));
  return out;
}

}  // namespace

CharValue char_det(const PeriodicCoefficient& p, const PeriodicCoefficient& q,
                   std::complex<double> lambda, double tolerance,
                   Precision precision) {
  if (precision == Precision::kExtended) {
    return char_det_impl<long double>(p, q, lambda, tolerance);
  }
  return char_det_impl<double>(p, q, lambda, tolerance);
}

}  // namespace spectra4

#include "spectra4/ode_core.hpp"

#include <cmath>

#include "spectra4/characteristic.hpp"
#include "spectra4/detail/rk78.hpp"

namespace spectra4 {

ScaledTransferMatrix ScaledTransferMatrix::identity() {
  ScaledTransferMatrix m;
  for (int i = 0; i < 4; ++i) m.at(i, i) = 1.0;
  return m;
}

std::complex<double> ScaledTransferMatrix::mantissa_det() const {
  auto minor3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
    return at(r0, c0) * (at(r1, c1) * at(r2, c2) - at(r1, c2) * at(r2, c1)) -
           at(r0, c1) * (at(r1, c0) * at(r2, c2) - at(r1, c2) * at(r2, c0)) +
           at(r0, c2) * (at(r1, c0) * at(r2, c1) - at(r1, c1) * at(r2, c0));
  };
  return at(0, 0) * minor3(1, 2, 3, 1, 2, 3) -
         at(0, 1) * minor3(1, 2, 3, 0, 2, 3) +
         at(0, 2) * minor3(1, 2, 3, 0, 1, 3) -
         at(0, 3) * minor3(1, 2, 3, 0, 1, 2);
}

namespace {

// Columns of A evolve independently under A' = P(x) A; we carry all 16
// entries as one state vector, row-major.
template <class R>
ScaledTransferMatrix integrate_impl(const PeriodicCoefficient& p,
                                    const PeriodicCoefficient& q,
                                    std::complex<double> lambda,
                                    double tolerance) {
  using C = std::complex<R>;
  const C lam(static_cast<R>(lambda.real()), static_cast<R>(lambda.imag()));

  auto rhs = [&](R x, const std::array<C, 16>& y, std::array<C, 16>& dy) {
    const R px = p.eval_at<R>(x);
    const R qx = q.eval_at<R>(x);
    for (int c = 0; c < 4; ++c) {
      const C y0 = y[0 + c], y1 = y[4 + c], y2 = y[8 + c], y3 = y[12 + c];
      dy[0 + c] = y1;
      dy[4 + c] = y2;
      dy[8 + c] = -px * y1 + y3;
      dy[12 + c] = (lam - qx) * y0;
    }
  };

  std::array<C, 16> y0{};
  for (int i = 0; i < 4; ++i) y0[5 * i] = C(1);

  const double z_abs = std::abs(z_of_lambda(lambda));
  const double h_cap = 0.25 / (1.0 + z_abs);

  auto state = detail::integrate_scaled<R, 16>(rhs, y0, tolerance, h_cap);

  ScaledTransferMatrix out;
  for (int i = 0; i < 16; ++i) {
    out.mantissa[i] = {static_cast<double>(state.y[i].real()),
                       static_cast<double>(state.y[i].imag())};
  }
  out.log_scale = state.log_scale;
  return out;
}

}  // namespace

ScaledTransferMatrix integrate_fundamental(const PeriodicCoefficient& p,
                                           const PeriodicCoefficient& q,
                                           std::complex<double> lambda,
                                           double tolerance,
                                           Precision precision) {
  if (precision == Precision::kExtended) {
    return integrate_impl<long double>(p, q, lambda, tolerance);
  }
  return integrate_impl<double>(p, q, lambda, tolerance);
}

double wronskian_drift(const ScaledTransferMatrix& result) {
  const std::complex<double> det =
      result.mantissa_det() * std::exp(4.0 * result.log_scale);
  return std::abs(det - 1.0);
}

}  // namespace spectra4

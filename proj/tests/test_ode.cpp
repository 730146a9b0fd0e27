#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "spectra4/characteristic.hpp"
#include "spectra4/detail/rk78.hpp"
#include "spectra4/ode_core.hpp"

using namespace spectra4;

TEST_CASE("free problem at lambda = 0: polynomial fundamental system") {
  const auto z = PeriodicCoefficient::zero();
  const auto A = integrate_fundamental(z, z, 0.0, 1e-12);
  // Columns are 1, x, x^2/2, x^3/6 at x = 1.
  const double expected[4][4] = {{1, 1, 0.5, 1.0 / 6},
                                 {0, 1, 1, 0.5},
                                 {0, 0, 1, 1},
                                 {0, 0, 0, 1}};
  const double scale = std::exp(A.log_scale);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(std::abs(A.at(i, j) * scale - expected[i][j]) < 1e-11);
    }
  }
}

TEST_CASE("integrator order: global error scales like h^8") {
  // Fixed-step integration of y' = y (forced by a huge tolerance and the
  // step cap); halving the cap should shrink the error by about 2^8.
  auto rhs = [](double, const std::array<std::complex<double>, 1>& y,
                std::array<std::complex<double>, 1>& dy) { dy[0] = y[0]; };
  auto run = [&](double h) {
    auto st = detail::integrate_scaled<double, 1>(rhs, {1.0}, 1e30, h);
    return std::abs(st.y[0] * std::exp(st.log_scale) - std::exp(1.0));
  };
  const double e1 = run(0.5);
  const double e2 = run(0.25);
  REQUIRE(e2 > 1e-15);  // both errors must sit above roundoff to compare
  const double ratio = e1 / e2;
  CHECK(ratio > 60.0);
  CHECK(ratio < 1200.0);
}

TEST_CASE("Wronskian stays on the unit determinant at moderate |lambda|") {
  // The fundamental matrix has entries of size e^{|z|}, so its determinant
  // (exactly 1 for a traceless system) is recovered from four-fold products
  // with roundoff eps * e^{4|z|}. The check is therefore only meaningful
  // while e^{4|z|} * eps stays below the tolerance, i.e. |lambda| <~ 300.
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::uniform_real_distribution<double> lam(-300.0, 300.0);
  for (int trial = 0; trial < 10; ++trial) {
    PeriodicCoefficient p(amp(rng), {{1, amp(rng), amp(rng)}});
    PeriodicCoefficient q(amp(rng), {{2, amp(rng), amp(rng)}});
    const auto A = integrate_fundamental(p, q, lam(rng), 1e-12);
    CHECK(wronskian_drift(A) < 1e-9);
  }
}

TEST_CASE("extended precision path stays consistent with double") {
  // The returned matrix always stores double mantissas, so the determinant
  // drift bottoms out at the same roundoff floor for both precisions; the
  // meaningful checks are that the extended path conserves the Wronskian to
  // that floor and matches the double path where double is still accurate.
  PeriodicCoefficient p(0.0, {{1, 0.0, 1.0}});
  PeriodicCoefficient q(0.0, {{1, 1.0, 0.0}});
  const double lam = 2.0e3;
  const auto ed =
      integrate_fundamental(p, q, lam, 1e-16, Precision::kExtended);
  CHECK(wronskian_drift(ed) < 1e-6);

  const auto cd_d = char_det(p, q, lam, 1e-12, Precision::kDouble);
  const auto cd_e = char_det(p, q, lam, 1e-16, Precision::kExtended);
  const std::complex<double> a =
      cd_e.mantissa * std::exp(cd_e.log_scale - cd_d.log_scale);
  CHECK(std::abs(a - cd_d.mantissa) < 1e-9 * std::abs(cd_d.mantissa));
}

TEST_CASE("dual route: product formula agrees with minor propagation at "
          "moderate z") {
  PeriodicCoefficient p(0.1, {{1, 0.3, 0.5}});
  PeriodicCoefficient q(0.0, {{2, -0.4, 0.2}});
  for (double z : {1.5, 4.0, 8.0, 12.0}) {
    const double lam = z * z * z * z;
    const auto A = integrate_fundamental(p, q, lam, 1e-12);
    const auto via_matrix = char_det_from_matrix(A);
    const auto direct = char_det(p, q, lam, 1e-12);
    const std::complex<double> a =
        via_matrix.mantissa *
        std::exp(via_matrix.log_scale - direct.log_scale);
    CHECK(std::abs(a - direct.mantissa) < 1e-8 * std::abs(direct.mantissa));
  }
}

TEST_CASE("the product formula cancels catastrophically at large z; the "
          "minor propagation does not") {
  const auto zero = PeriodicCoefficient::zero();
  const double zv = 40.0;
  const double lam = zv * zv * zv * zv;
  const auto closed = char_det_unperturbed_scaled(lam);

  const auto direct = char_det(zero, zero, lam, 1e-12);
  const std::complex<double> d =
      direct.mantissa * std::exp(direct.log_scale - closed.log_scale);
  CHECK(std::abs(d - closed.mantissa) < 1e-8 * std::abs(closed.mantissa));

  const auto A = integrate_fundamental(zero, zero, lam, 1e-12);
  const auto via_matrix = char_det_from_matrix(A);
  const std::complex<double> v =
      via_matrix.mantissa * std::exp(via_matrix.log_scale - closed.log_scale);
  // The minors are formed from entries of size e^{2z}; at z = 40 the
  // roundoff alone is eps * e^{z} times larger than the true value.
  CHECK(std::abs(v - closed.mantissa) > 1e-4 * std::abs(closed.mantissa));
}

TEST_CASE("step-size underflow surfaces as IntegrationFailure") {
  auto rhs = [](double x, const std::array<std::complex<double>, 1>& y,
                std::array<std::complex<double>, 1>& dy) {
    const double d = 0.5 - x;
    dy[0] = y[0] / (d * d);  // essential singularity inside the interval
  };
  CHECK_THROWS_AS(
      (detail::integrate_scaled<double, 1>(rhs, {1.0}, 1e-12, 0.25)),
      IntegrationFailure);
}

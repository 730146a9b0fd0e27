#include <cmath>
#include <complex>

#include "doctest.h"
#include "spectra4/characteristic.hpp"

using namespace spectra4;

TEST_CASE("principal quartic root branch") {
  CHECK(std::abs(z_of_lambda(16.0) - 2.0) < 1e-14);
  // Negative real lambda maps to arg z = pi/4.
  const auto z = z_of_lambda(-16.0);
  CHECK(std::arg(z) == doctest::Approx(std::acos(-1.0) / 4).epsilon(1e-12));
  // Branch range (-pi/4, pi/4].
  for (double ang : {-3.0, -1.0, 0.5, 2.5}) {
    const auto w = z_of_lambda(std::polar(7.0, ang));
    CHECK(std::arg(w) > -std::acos(-1.0) / 4 - 1e-12);
    CHECK(std::arg(w) <= std::acos(-1.0) / 4 + 1e-12);
    CHECK(std::abs(lambda_of_z(w) - std::polar(7.0, ang)) < 1e-12);
  }
}

TEST_CASE("unperturbed determinant against the closed form, wide z range") {
  const auto zero = PeriodicCoefficient::zero();
  for (double zv : {0.7, 2.0, 5.0, 15.0, 35.0, 60.0, 90.0}) {
    const double lam = std::pow(zv, 4);
    const auto got = char_det(zero, zero, lam, 1e-12);
    const auto ref = char_det_unperturbed_scaled(lam);
    const std::complex<double> g =
        got.mantissa * std::exp(got.log_scale - ref.log_scale);
    CHECK(std::abs(g - ref.mantissa) < 1e-9 * std::abs(ref.mantissa));
  }
}

TEST_CASE("unperturbed closed form at the origin") {
  CHECK(char_det_unperturbed(0.0) == std::complex<double>(-1.0, 0.0));
  const auto v = char_det_unperturbed_scaled(0.0);
  CHECK(std::abs(v.mantissa * std::exp(v.log_scale) + 1.0) < 1e-14);
}

TEST_CASE("Schwarz symmetry for real coefficients") {
  PeriodicCoefficient p(0.2, {{1, 0.5, -0.3}});
  PeriodicCoefficient q(0.0, {{2, 0.1, 0.4}});
  for (std::complex<double> lam : {std::complex<double>(40.0, 15.0),
                                   std::complex<double>(-3.0, 2.0),
                                   std::complex<double>(900.0, -120.0)}) {
    const auto a = char_det(p, q, lam, 1e-12);
    const auto b = char_det(p, q, std::conj(lam), 1e-12);
    const std::complex<double> va = a.mantissa * std::exp(a.log_scale);
    const std::complex<double> vb = b.mantissa * std::exp(b.log_scale);
    CHECK(std::abs(vb - std::conj(va)) < 1e-9 * std::abs(va));
  }
}

TEST_CASE("normalized mantissa magnitude stays in (0, 1]") {
  PeriodicCoefficient p(0.0, {{1, 0.0, 1.0}});
  const auto zero = PeriodicCoefficient::zero();
  for (double zv : {1.0, 10.0, 50.0}) {
    const auto v = char_det(p, zero, std::pow(zv, 4), 1e-12);
    CHECK(std::abs(v.mantissa) <= 1.0 + 1e-15);
    CHECK(std::abs(v.mantissa) > 0.0);
  }
}

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "spectra4/quadrature.hpp"

using namespace spectra4;

TEST_CASE("GL16 integrates degree-31 polynomials exactly") {
  // integral of x^31 over [0, 2] is 2^32/32.
  const double got =
      gauss_legendre_16([](double x) { return std::pow(x, 31); }, 0.0, 2.0);
  CHECK(got == doctest::Approx(std::pow(2.0, 32) / 32.0).epsilon(1e-13));
}

TEST_CASE("a single panel cannot resolve a fast oscillation") {
  const double pi = std::numbers::pi;
  // integral of sin(25 pi x) over [0, 1] = 2/(25 pi); 16 nodes on one panel
  // cannot track 12.5 periods, while the composite rule below can.
  const double exact = 2.0 / (25 * pi);
  const double single =
      gauss_legendre_16([&](double x) { return std::sin(25 * pi * x); }, 0.0,
                        1.0);
  CHECK(std::abs(single - exact) > 1e-4);
  const double composite = composite_gauss_legendre(
      [&](double x) { return std::sin(25 * pi * x); }, uniform_breakpoints(26));
  CHECK(composite == doctest::Approx(exact).epsilon(1e-12));
}

TEST_CASE("composite rule on an oscillatory integrand") {
  const double pi = std::numbers::pi;
  // integral of sin(9 pi x) over [0, 1] = 2/(9 pi).
  const double got = composite_gauss_legendre(
      [&](double x) { return std::sin(9 * pi * x); }, uniform_breakpoints(10));
  CHECK(got == doctest::Approx(2.0 / (9 * pi)).epsilon(1e-13));
}

TEST_CASE("geometric endpoint panels resolve a boundary layer") {
  const double pi = std::numbers::pi;
  // integral of e^{-3 pi s} over [0, 1] = (1 - e^{-3 pi})/(3 pi).
  const double exact = (1.0 - std::exp(-3 * pi)) / (3 * pi);
  const double got = composite_gauss_legendre(
      [&](double s) { return std::exp(-3 * pi * s); },
      geometric_endpoint_breakpoints(24));
  CHECK(got == doctest::Approx(exact).epsilon(1e-14));
}

TEST_CASE("geometric breakpoints: shape") {
  const auto bps = geometric_endpoint_breakpoints(4);
  REQUIRE(bps.size() == 9);
  CHECK(bps.front() == 0.0);
  CHECK(bps.back() == 1.0);
  // Symmetric about 1/2, widths halving toward the ends.
  for (std::size_t i = 0; i < bps.size(); ++i) {
    CHECK(bps[i] == doctest::Approx(1.0 - bps[bps.size() - 1 - i]));
  }
  CHECK(bps[1] == doctest::Approx(1.0 / 16));
  CHECK(bps[2] == doctest::Approx(1.0 / 8));
}

TEST_CASE("degenerate breakpoint requests are rejected") {
  CHECK_THROWS(composite_gauss_legendre([](double) { return 1.0; }, {0.5}));
  CHECK_THROWS(uniform_breakpoints(0));
  CHECK_THROWS(geometric_endpoint_breakpoints(0));
}

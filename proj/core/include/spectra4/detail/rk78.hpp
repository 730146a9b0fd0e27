#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "spectra4/errors.hpp"

namespace spectra4::detail {

// Fehlberg 13-stage embedded 7(8) pair. The classic coefficients; the
// error estimate collapses to (41/840)(k0 + k10 - k11 - k12).
template <class R>
struct Rkf78Tableau {
  static constexpr int kStages = 13;
  std::array<R, kStages> c{};
  std::array<std::array<R, kStages>, kStages> a{};
  std::array<R, kStages> b8{};

  Rkf78Tableau() {
    auto fr = [](long num, long den) { return R(num) / R(den); };
    c = {R(0),        fr(2, 27),  fr(1, 9), fr(1, 6), fr(5, 12), fr(1, 2),
         fr(5, 6),    fr(1, 6),   fr(2, 3), fr(1, 3), R(1),      R(0),
         R(1)};
    a[1][0] = fr(2, 27);
    a[2][0] = fr(1, 36);
    a[2][1] = fr(1, 12);
    a[3][0] = fr(1, 24);
    a[3][2] = fr(1, 8);
    a[4][0] = fr(5, 12);
    a[4][2] = fr(-25, 16);
    a[4][3] = fr(25, 16);
    a[5][0] = fr(1, 20);
    a[5][3] = fr(1, 4);
    a[5][4] = fr(1, 5);
    a[6][0] = fr(-25, 108);
    a[6][3] = fr(125, 108);
    a[6][4] = fr(-65, 27);
    a[6][5] = fr(125, 54);
    a[7][0] = fr(31, 300);
    a[7][4] = fr(61, 225);
    a[7][5] = fr(-2, 9);
    a[7][6] = fr(13, 900);
    a[8][0] = R(2);
    a[8][3] = fr(-53, 6);
    a[8][4] = fr(704, 45);
    a[8][5] = fr(-107, 9);
    a[8][6] = fr(67, 90);
    a[8][7] = R(3);
    a[9][0] = fr(-91, 108);
    a[9][3] = fr(23, 108);
    a[9][4] = fr(-976, 135);
    a[9][5] = fr(311, 54);
    a[9][6] = fr(-19, 60);
    a[9][7] = fr(17, 6);
    a[9][8] = fr(-1, 12);
    a[10][0] = fr(2383, 4100);
    a[10][3] = fr(-341, 164);
    a[10][4] = fr(4496, 1025);
    a[10][5] = fr(-301, 82);
    a[10][6] = fr(2133, 4100);
    a[10][7] = fr(45, 82);
    a[10][8] = fr(45, 164);
    a[10][9] = fr(18, 41);
    a[11][0] = fr(3, 205);
    a[11][5] = fr(-6, 41);
    a[11][6] = fr(-3, 205);
    a[11][7] = fr(-3, 41);
    a[11][8] = fr(3, 41);
    a[11][9] = fr(6, 41);
    a[12][0] = fr(-1777, 4100);
    a[12][3] = fr(-341, 164);
    a[12][4] = fr(4496, 1025);
    a[12][5] = fr(-289, 82);
    a[12][6] = fr(2193, 4100);
    a[12][7] = fr(51, 82);
    a[12][8] = fr(33, 164);
    a[12][9] = fr(12, 41);
    a[12][11] = R(1);
    b8 = {R(0),       R(0),       R(0),       R(0),      R(0),
          fr(34, 105), fr(9, 35),  fr(9, 35),  fr(9, 280), fr(9, 280),
          R(0),       fr(41, 840), fr(41, 840)};
  }
};

template <class R, std::size_t N>
struct ScaledState {
  std::array<std::complex<R>, N> y{};
  double log_scale = 0.0;
};

/// Integrates y' = rhs(x, y) from x = 0 to 1 with adaptive steps, an
/// h <= h_cap ceiling, and mantissa renormalization whenever the largest
/// entry magnitude leaves [1, e^20].
///
/// `rhs(x, y, dydx)` fills dydx.
template <class R, std::size_t N, class Rhs>
ScaledState<R, N> integrate_scaled(const Rhs& rhs,
                                   std::array<std::complex<R>, N> y0,
                                   double tolerance, double h_cap) {
  static const Rkf78Tableau<R> tab;
  using C = std::complex<R>;

  ScaledState<R, N> state;
  state.y = y0;

  const R renorm_hi = std::exp(R(20));
  const R renorm_lo = std::exp(R(-20));
  auto renormalize = [&]() {
    R mx = 0;
    for (const C& v : state.y) mx = std::max(mx, std::abs(v));
    if (mx > renorm_hi || (mx < renorm_lo && mx > 0)) {
      for (C& v : state.y) v /= mx;
      state.log_scale += static_cast<double>(std::log(mx));
    }
  };

  std::array<std::array<C, N>, Rkf78Tableau<R>::kStages> k;
  std::array<C, N> ytmp, ynew;

  R x = 0;
  R h = std::min<R>(R(h_cap), R(0.05));
  const R h_min = R(1e-13);
  int consecutive_rejects = 0;

  while (x < R(1)) {
    h = std::min(h, R(1) - x);
    h = std::min(h, R(h_cap));
    if (h < h_min) {
      throw IntegrationFailure("step size underflow", static_cast<double>(x));
    }

    rhs(x, state.y, k[0]);
    for (int s = 1; s < Rkf78Tableau<R>::kStages; ++s) {
      for (std::size_t i = 0; i < N; ++i) {
        C acc = 0;
        for (int j = 0; j < s; ++j) {
          if (tab.a[s][j] != R(0)) acc += tab.a[s][j] * k[j][i];
        }
        ytmp[i] = state.y[i] + h * acc;
      }
      rhs(x + tab.c[s] * h, ytmp, k[s]);
    }

    R ymax = 0;
    for (std::size_t i = 0; i < N; ++i) {
      C acc = 0;
      for (int s = 0; s < Rkf78Tableau<R>::kStages; ++s) {
        if (tab.b8[s] != R(0)) acc += tab.b8[s] * k[s][i];
      }
      ynew[i] = state.y[i] + h * acc;
      ymax = std::max(ymax, std::abs(ynew[i]));
    }

    const R err_coef = R(41) / R(840);
    R err = 0;
    for (std::size_t i = 0; i < N; ++i) {
      err = std::max(err,
                     std::abs(h * err_coef *
                              (k[0][i] + k[10][i] - k[11][i] - k[12][i])));
    }
    const R denom = R(tolerance) * std::max<R>(ymax, R(1));
    const R ratio = err / denom;

    if (ratio <= R(1)) {
      x += h;
      state.y = ynew;
      renormalize();
      consecutive_rejects = 0;
      const R grow =
          ratio > R(0) ? R(0.9) * std::pow(ratio, R(-1) / R(8)) : R(4);
      h *= std::clamp<R>(grow, R(0.2), R(4));
    } else {
      h *= std::clamp<R>(R(0.9) * std::pow(ratio, R(-1) / R(8)), R(0.1),
                         R(0.9));
      if (++consecutive_rejects > 60) {
        throw IntegrationFailure("repeated step rejection",
                                 static_cast<double>(x));
      }
    }
  }
  return state;
}

}  // namespace spectra4::detail

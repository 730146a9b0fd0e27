#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include "spectra4/errors.hpp"

namespace spectra4 {

/// One cos/sin pair of a real trigonometric polynomial:
/// a*cos(2*pi*k*x) + b*sin(2*pi*k*x).
struct Harmonic {
  int k = 1;
  double a = 0.0;
  double b = 0.0;
};

/// Half-odd-frequency Fourier data of a coefficient at index n:
/// f0 = mean, f_hat_cn = integral against cos(pi(2n+1)x),
/// f_hat_sn against sin(pi(2n+1)x), f_hat_n against exp(-i pi(2n+1)x).
struct FourierRecord {
  int n = 0;
  double f0 = 0.0;
  double f_hat_cn = 0.0;
  double f_hat_sn = 0.0;
  std::complex<double> f_hat_n;
};

/// A real 1-periodic coefficient held as a finite trigonometric polynomial,
/// f(x) = a0 + sum_k (a_k cos 2 pi k x + b_k sin 2 pi k x), degree <= 64.
///
/// Immutable after construction; safe to share across threads.
class PeriodicCoefficient {
 public:
  static constexpr int kMaxDegree = 64;

  PeriodicCoefficient() = default;
  PeriodicCoefficient(double constant_term, std::vector<Harmonic> harmonics,
                      int smoothness_order = 4);

  static PeriodicCoefficient zero() { return PeriodicCoefficient(); }
  static PeriodicCoefficient constant(double c) {
    return PeriodicCoefficient(c, {});
  }

  /// Trigonometric interpolation of uniform samples f(j/N), j = 0..N-1.
  static PeriodicCoefficient from_samples(std::span<const double> samples,
                                          int smoothness_order);

  double constant_term() const { return constant_; }
  const std::vector<Harmonic>& harmonics() const { return harmonics_; }
  int smoothness_order() const { return smoothness_; }
  bool is_zero() const { return constant_ == 0.0 && harmonics_.empty(); }

  /// f^(order)(x mod 1). Unrestricted order for trig polynomials; sampled
  /// representations are limited by their declared smoothness.
  double eval(double x, int derivative_order = 0) const;

  /// Same evaluation at an arbitrary floating type (used by the
  /// extended-precision integration path).
  template <class R>
  R eval_at(R x, int derivative_order = 0) const;

  /// The derivative as a coefficient in its own right.
  PeriodicCoefficient derivative(int order = 1) const;

  double mean() const { return constant_; }

  /// Integral of f^2 over one period (Parseval).
  double l2_norm_sq() const;

  /// Closed-form half-odd-frequency Fourier record.
  FourierRecord fourier(int n) const;

  /// The same record by oscillation-resolving composite Gauss-Legendre
  /// panels (panel length <= 1/(2n+2), 16 points per panel).
  FourierRecord fourier_by_quadrature(int n) const;

  PeriodicCoefficient operator+(const PeriodicCoefficient& other) const;

 private:
  void check_order(int order) const;

  double constant_ = 0.0;
  std::vector<Harmonic> harmonics_;
  int smoothness_ = 4;
  bool from_samples_ = false;
};

template <class R>
R PeriodicCoefficient::eval_at(R x, int derivative_order) const {
  check_order(derivative_order);
  const R two_pi = 2 * std::numbers::pi_v<R>;
  x -= std::floor(x);
  R sum = derivative_order == 0 ? R(constant_) : R(0);
  for (const Harmonic& h : harmonics_) {
    // d/dx rotates (a, b) -> (2 pi k b, -2 pi k a).
    R a = R(h.a), b = R(h.b);
    const R w = two_pi * R(h.k);
    for (int d = 0; d < derivative_order; ++d) {
      const R na = w * b, nb = -w * a;
      a = na;
      b = nb;
    }
    const R arg = w * x;
    sum += a * std::cos(arg) + b * std::sin(arg);
  }
  return sum;
}

}  // namespace spectra4

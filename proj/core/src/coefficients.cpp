#include "spectra4/coefficients.hpp"

#include <algorithm>
#include <map>
#include <numbers>

#include "spectra4/quadrature.hpp"

namespace spectra4 {

namespace {

std::vector<Harmonic> normalized(std::vector<Harmonic> hs) {
  std::map<int, Harmonic> by_k;
  for (const Harmonic& h : hs) {
    if (h.k < 1 || h.k > PeriodicCoefficient::kMaxDegree) {
      throw ConfigError("harmonic index out of range [1, 64]: " +
                        std::to_string(h.k));
    }
    auto& slot = by_k[h.k];
    slot.k = h.k;
    slot.a += h.a;
    slot.b += h.b;
  }
  std::vector<Harmonic> out;
  for (auto& [k, h] : by_k) {
    if (h.a != 0.0 || h.b != 0.0) out.push_back(h);
  }
  return out;
}

}  // namespace

PeriodicCoefficient::PeriodicCoefficient(double constant_term,
                                         std::vector<Harmonic> harmonics,
                                         int smoothness_order)
    : constant_(constant_term),
      harmonics_(normalized(std::move(harmonics))),
      smoothness_(smoothness_order) {}

PeriodicCoefficient PeriodicCoefficient::from_samples(
    std::span<const double> samples, int smoothness_order) {
  const int N = static_cast<int>(samples.size());
  if (N < 2) throw ConfigError("need at least two samples");
  const int K = (N - 1) / 2;
  if (K > kMaxDegree || (N % 2 == 0 && N / 2 > kMaxDegree)) {
    throw ConfigError("sample count implies degree beyond 64");
  }
  const double two_pi = 2.0 * std::numbers::pi;
  double a0 = 0.0;
  for (double v : samples) a0 += v;
  a0 /= N;

  std::vector<Harmonic> hs;
  for (int k = 1; k <= K; ++k) {
    double a = 0.0, b = 0.0;
    for (int j = 0; j < N; ++j) {
      const double arg = two_pi * k * j / N;
      a += samples[j] * std::cos(arg);
      b += samples[j] * std::sin(arg);
    }
    hs.push_back({k, 2.0 * a / N, 2.0 * b / N});
  }
  if (N % 2 == 0) {
    double a = 0.0;
    for (int j = 0; j < N; ++j) a += samples[j] * (j % 2 == 0 ? 1.0 : -1.0);
    hs.push_back({N / 2, a / N, 0.0});
  }
  PeriodicCoefficient f(a0, std::move(hs), smoothness_order);
  f.from_samples_ = true;
  return f;
}

void PeriodicCoefficient::check_order(int order) const {
  if (order < 0) throw UnsupportedDerivative("negative derivative order");
  if (from_samples_ && order > smoothness_) {
    throw UnsupportedDerivative(
        "derivative order " + std::to_string(order) +
        " exceeds declared smoothness " + std::to_string(smoothness_) +
        " of a sampled coefficient");
  }
}

double PeriodicCoefficient::eval(double x, int derivative_order) const {
  return eval_at<double>(x, derivative_order);
}

PeriodicCoefficient PeriodicCoefficient::derivative(int order) const {
  check_order(order);
  if (order == 0) return *this;
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<Harmonic> hs;
  for (const Harmonic& h : harmonics_) {
    double a = h.a, b = h.b;
    const double w = two_pi * h.k;
    for (int d = 0; d < order; ++d) {
      const double na = w * b, nb = -w * a;
      a = na;
      b = nb;
    }
    hs.push_back({h.k, a, b});
  }
  PeriodicCoefficient f(0.0, std::move(hs),
                        std::max(0, smoothness_ - order));
  f.from_samples_ = from_samples_;
  return f;
}

double PeriodicCoefficient::l2_norm_sq() const {
  double s = constant_ * constant_;
  for (const Harmonic& h : harmonics_) s += 0.5 * (h.a * h.a + h.b * h.b);
  return s;
}

FourierRecord PeriodicCoefficient::fourier(int n) const {
  if (n < 0) throw ConfigError("fourier index must be nonnegative");
  const int m = 2 * n + 1;
  const double pi = std::numbers::pi;
  FourierRecord r;
  r.n = n;
  r.f0 = constant_;
  // Against cos(pi m x): only the sine harmonics survive,
  //   integral sin(2 pi k x) cos(pi m x) = (4k/pi)/(4k^2 - m^2).
  // Against sin(pi m x): the mean and the cosine harmonics survive,
  //   integral cos(2 pi k x) sin(pi m x) = (2m/pi)/(m^2 - 4k^2).
  double cn = 0.0;
  double sn = 2.0 * constant_ / (m * pi);
  for (const Harmonic& h : harmonics_) {
    const double denom = 4.0 * h.k * h.k - static_cast<double>(m) * m;
    cn += h.b * (4.0 * h.k / pi) / denom;
    sn -= h.a * (2.0 * m / pi) / denom;
  }
  r.f_hat_cn = cn;
  r.f_hat_sn = sn;
  r.f_hat_n = {cn, -sn};
  return r;
}

FourierRecord PeriodicCoefficient::fourier_by_quadrature(int n) const {
  if (n < 0) throw ConfigError("fourier index must be nonnegative");
  const int m = 2 * n + 1;
  const double pi = std::numbers::pi;
  // Panel length below half the oscillation period keeps GL16 in its
  // spectral-accuracy regime.
  const auto bps = uniform_breakpoints(2 * (n + 1));
  FourierRecord r;
  r.n = n;
  r.f0 = composite_gauss_legendre([&](double x) { return eval(x); }, bps);
  r.f_hat_cn = composite_gauss_legendre(
      [&](double x) { return eval(x) * std::cos(pi * m * x); }, bps);
  r.f_hat_sn = composite_gauss_legendre(
      [&](double x) { return eval(x) * std::sin(pi * m * x); }, bps);
  r.f_hat_n = {r.f_hat_cn, -r.f_hat_sn};
  return r;
}

PeriodicCoefficient PeriodicCoefficient::operator+(
    const PeriodicCoefficient& other) const {
  std::vector<Harmonic> hs = harmonics_;
  hs.insert(hs.end(), other.harmonics_.begin(), other.harmonics_.end());
  PeriodicCoefficient f(constant_ + other.constant_, std::move(hs),
                        std::min(smoothness_, other.smoothness_));
  f.from_samples_ = from_samples_ || other.from_samples_;
  return f;
}

}  // namespace spectra4

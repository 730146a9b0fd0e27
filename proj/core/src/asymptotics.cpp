#include "spectra4/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "spectra4/errors.hpp"
#include "spectra4/quadrature.hpp"

namespace spectra4 {

namespace {
constexpr double kPi = std::numbers::pi;
const std::complex<double> kImag(0.0, 1.0);
}  // namespace

ExpansionOrder expansion_order_from_string(const std::string& s) {
  if (s == "rough") return ExpansionOrder::kRough;
  if (s == "L1") return ExpansionOrder::kL1;
  if (s == "p1") return ExpansionOrder::kP1;
  if (s == "p2") return ExpansionOrder::kP2;
  if (s == "p3_full") return ExpansionOrder::kP3Full;
  throw ConfigError("unknown expansion order: " + s);
}

std::string to_string(ExpansionOrder order) {
  switch (order) {
    case ExpansionOrder::kRough: return "rough";
    case ExpansionOrder::kL1: return "L1";
    case ExpansionOrder::kP1: return "p1";
    case ExpansionOrder::kP2: return "p2";
    case ExpansionOrder::kP3Full: return "p3_full";
  }
  return "?";
}

AsymptoticEigenvalue mu_asymptotic(const PeriodicCoefficient& p,
                                   const PeriodicCoefficient& q, int n,
                                   ExpansionOrder order) {
  if (n < 0) throw ConfigError("index must be nonnegative");
  AsymptoticEigenvalue r;
  r.n = n;
  r.order = order;
  const double z0 = kPi / 2 + kPi * n;
  r.mu0 = std::pow(z0, 4);
  const double p0 = p.mean();

  switch (order) {
    case ExpansionOrder::kRough:
      break;
    case ExpansionOrder::kL1:
      r.term_z2 = z0 * z0 * (p.fourier(n).f_hat_cn - p0);
      break;
    case ExpansionOrder::kP1:
      r.term_z2 = -p0 * z0 * z0;
      r.term_z1 = -z0 * p.derivative(1).fourier(n).f_hat_sn / 2.0;
      break;
    case ExpansionOrder::kP2:
      r.term_z2 = -p0 * z0 * z0;
      r.term_z0 = (p0 * p0 - p.l2_norm_sq()) / 8.0 + q.mean() -
                  p.eval(0.0, 1) / 2.0 -
                  p.derivative(2).fourier(n).f_hat_cn / 4.0 +
                  q.fourier(n).f_hat_cn;
      break;
    case ExpansionOrder::kP3Full: {
      r.term_z2 = -p0 * z0 * z0;
      r.term_z0 = (p0 * p0 - p.l2_norm_sq()) / 8.0 + q.mean() -
                  p.eval(0.0, 1) / 2.0;
      const double m = 2.0 * n + 1.0;
      r.term_zm1 = p.derivative(3).fourier(n).f_hat_sn / (4.0 * kPi * m) -
                   q.derivative(1).fourier(n).f_hat_sn / (kPi * m);
      break;
    }
  }
  r.mu = r.mu0 + r.term_z2 + r.term_z1 + r.term_z0 + r.term_zm1;
  return r;
}

double mu_asymptotic_sharp(const PeriodicCoefficient& p,
                           const PeriodicCoefficient& q, int n) {
  const double z0 = kPi / 2 + kPi * n;
  const double p0 = p.mean();
  return std::pow(z0, 4) + z0 * z0 * (p.fourier(n).f_hat_cn - p0) +
         (p0 * p0 - p.l2_norm_sq()) / 8.0 + q.mean() + q.fourier(n).f_hat_cn;
}

double kappa(const PeriodicCoefficient& p, const PeriodicCoefficient& q, int j,
             int n) {
  if (n < 0) throw ConfigError("index must be nonnegative");
  const double m = 2.0 * n + 1.0;
  std::function<double(double)> g;
  double scale = 0.0;
  switch (j) {
    case 1:
      scale = 1.0 / 4.0;
      g = [&](double s) { return p.eval(s) - p.eval(1.0 - s); };
      break;
    case 2:
      scale = 1.0 / 8.0;
      g = [&](double s) { return p.eval(s, 1) + p.eval(1.0 - s, 1); };
      break;
    case 3:
      scale = 1.0 / 16.0;
      g = [&](double s) {
        return p.eval(s, 2) - p.eval(1.0 - s, 2) - 4.0 * q.eval(s) +
               4.0 * q.eval(1.0 - s);
      };
      break;
    case 4:
      scale = 1.0 / 32.0;
      g = [&](double s) {
        return p.eval(s, 3) + p.eval(1.0 - s, 3) - 4.0 * q.eval(s, 1) -
               4.0 * q.eval(1.0 - s, 1);
      };
      break;
    default:
      throw ConfigError("kappa index must be 1..4");
  }
  // The e^{-pi m s} weight concentrates near s = 0; geometric panels toward
  // both endpoints resolve it for every n at fixed cost.
  const auto bps = geometric_endpoint_breakpoints(24);
  return scale * composite_gauss_legendre(
                     [&](double s) { return std::exp(-kPi * m * s) * g(s); },
                     bps);
}

std::array<std::complex<double>, 2> psi_pair(const PeriodicCoefficient& p) {
  const double dp0 = p.eval(0.0, 1);
  return {std::complex<double>(dp0 / 8.0, -dp0 / 8.0),
          std::complex<double>(dp0 / 8.0, dp0 / 8.0)};
}

std::array<PhasePair, 4> phase_pairs(const PeriodicCoefficient& p,
                                     const PeriodicCoefficient& q,
                                     std::complex<double> z) {
  const double p0 = p.mean();
  const double q0 = q.mean();
  const double pn2 = p.l2_norm_sq();
  const std::complex<double> z2 = z * z;
  const std::complex<double> z4 = z2 * z2;

  PhasePair lo;
  lo.alpha = 1.0 + p0 / (4.0 * z2);
  lo.beta = kImag - kImag * p0 / (4.0 * z2);

  PhasePair hi;
  hi.alpha = 1.0 + pn2 / (32.0 * z4) - q0 / (4.0 * z4) + p0 / (4.0 * z2);
  hi.beta = kImag + kImag * pn2 / (32.0 * z4) - kImag * q0 / (4.0 * z4) -
            kImag * p0 / (4.0 * z2);

  return {lo, lo, hi, hi};
}

std::complex<double> gamma_leading(const PeriodicCoefficient& p,
                                   const PeriodicCoefficient& q, int k,
                                   int variant, int n) {
  if (variant != 1 && variant != 2) {
    throw ConfigError("gamma variant must be 1 or 2");
  }
  const double z = kPi / 2 + kPi * n;
  const double z2 = z * z, z3 = z2 * z, z4 = z2 * z2;
  switch (k) {
    case 1: {
      const double k1 = kappa(p, q, 1, n);
      if (variant == 1) {
        return kImag * p.fourier(n).f_hat_cn / (2.0 * z) + k1 / z;
      }
      return {k1 / z, 0.0};
    }
    case 2: {
      const double k2 = kappa(p, q, 2, n);
      if (variant == 1) {
        return -kImag * p.derivative(1).fourier(n).f_hat_sn / (4.0 * z2) +
               k2 / z2;
      }
      return {k2 / z2, 0.0};
    }
    case 3: {
      const double k3 = kappa(p, q, 3, n);
      const auto psi = psi_pair(p);
      if (variant == 1) {
        return psi[0] / z3 -
               kImag * p.derivative(2).fourier(n).f_hat_cn / (8.0 * z3) +
               kImag * q.fourier(n).f_hat_cn / (2.0 * z3) + k3 / z3;
      }
      return psi[1] / z3 + k3 / z3;
    }
    case 4: {
      const double k4 = kappa(p, q, 4, n);
      const auto psi = psi_pair(p);
      const double p0sq = p.eval(0.0) * p.eval(0.0);
      const std::complex<double> shared =
          3.0 * p0sq / (32.0 * z4) + k4 / z4;
      if (variant == 1) {
        return psi[0] / z3 + shared +
               kImag * p.derivative(3).fourier(n).f_hat_sn / (16.0 * z4) -
               kImag * q.derivative(1).fourier(n).f_hat_sn / (4.0 * z4);
      }
      return psi[1] / z3 + shared;
    }
    default:
      throw ConfigError("gamma stage must be 1..4");
  }
}

AsymptoticCharValue char_asymptotic(const PeriodicCoefficient& p,
                                    const PeriodicCoefficient& q,
                                    std::complex<double> lambda) {
  const std::complex<double> z = z_of_lambda(lambda);
  AsymptoticCharValue out;
  out.n = std::max(0, static_cast<int>(std::lround((z.real() - kPi / 2) / kPi)));

  const auto phases = phase_pairs(p, q, z);
  const std::complex<double> alpha = phases[3].alpha;
  const std::complex<double> beta = phases[3].beta;
  const std::complex<double> az = alpha * z;
  const std::complex<double> cos_az = std::cos(az);

  const double k4 = kappa(p, q, 4, out.n);
  const std::complex<double> z2 = z * z;
  const std::complex<double> z3 = z2 * z;
  const std::complex<double> z4 = z2 * z2;
  const double dp0 = p.eval(0.0, 1);

  std::complex<double> correction = 1.0 + k4 / z4;
  out.near_zero = std::abs(cos_az) < 1e-3;
  if (!out.near_zero) {
    correction += dp0 * (1.0 - std::tan(az)) / (8.0 * z3);
  }

  // Split the exponential magnitude off into log_scale.
  const std::complex<double> expo = -kImag * beta * z;
  out.log_scale = expo.real();
  out.mantissa = -std::exp(std::complex<double>(0.0, expo.imag())) * cos_az /
                 2.0 * correction;
  const double mag = std::abs(out.mantissa);
  if (mag > 1.0) {
    out.mantissa /= mag;
    out.log_scale += std::log(mag);
  }
  return out;
}

std::optional<double> fit_residual_order(const std::vector<int>& indices,
                                         const std::vector<double>& residuals,
                                         const std::vector<double>& mus) {
  if (indices.size() != residuals.size() || indices.size() != mus.size()) {
    throw ConfigError("mismatched fit inputs");
  }
  const double eps = std::numeric_limits<double>::epsilon();
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const double floor = 64.0 * eps * std::abs(mus[i]);
    if (residuals[i] <= floor || residuals[i] <= 0.0) continue;
    xs.push_back(std::log(kPi / 2 + kPi * indices[i]));
    ys.push_back(std::log(residuals[i]));
  }
  if (xs.size() < 3) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double nn = static_cast<double>(xs.size());
  return (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
}

}  // namespace spectra4

#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "spectra4/characteristic.hpp"
#include "spectra4/coefficients.hpp"

namespace spectra4 {

/// How many correction terms of the eigenvalue expansion to keep.
/// kRough: (pi/2 + pi n)^4 alone. kL1: the cosine-coefficient correction
/// available for merely integrable p. kP1..kP3Full: one, two, three orders
/// under increasing smoothness of p and q.
enum class ExpansionOrder { kRough, kL1, kP1, kP2, kP3Full };

ExpansionOrder expansion_order_from_string(const std::string& s);
std::string to_string(ExpansionOrder order);

/// mu_n to the requested order, with the term-by-term breakdown kept so
/// callers can report which correction dominates.
struct AsymptoticEigenvalue {
  int n = 0;
  ExpansionOrder order = ExpansionOrder::kRough;
  double mu = 0.0;        ///< total
  double mu0 = 0.0;       ///< (pi/2 + pi n)^4
  double term_z2 = 0.0;   ///< coefficient of (pi/2 + pi n)^2 scale
  double term_z1 = 0.0;   ///< first-derivative boundary contribution
  double term_z0 = 0.0;   ///< constant-order block
  double term_zm1 = 0.0;  ///< 1/(2n+1)-order block
};

/// Series form: all corrections written through Fourier data of p, q and
/// boundary values of p'.
AsymptoticEigenvalue mu_asymptotic(const PeriodicCoefficient& p,
                                   const PeriodicCoefficient& q, int n,
                                   ExpansionOrder order);

/// Resummed sharp form: the oscillatory corrections absorbed into the
/// half-odd cosine coefficients, mu_n = mu0 + (pi/2+pi n)^2 (p_cn - p0)
/// + (p0^2 - ||p||^2)/8 + q0 + q_cn + o(1). Algebraically equal to the
/// series form through the retained orders.
double mu_asymptotic_sharp(const PeriodicCoefficient& p,
                           const PeriodicCoefficient& q, int n);

/// The exponentially small boundary-layer integrals, j = 1..4:
/// weighted integrals of p, q and their derivatives against e^{-pi(2n+1)s},
/// computed on geometric endpoint panels.
double kappa(const PeriodicCoefficient& p, const PeriodicCoefficient& q, int j,
             int n);

/// psi_1 = (1-i) p'(0)/8, psi_2 = (1+i) p'(0)/8.
std::array<std::complex<double>, 2> psi_pair(const PeriodicCoefficient& p);

/// Sector phase multipliers at z: alpha_j, beta_j for the four sectors.
struct PhasePair {
  std::complex<double> alpha;
  std::complex<double> beta;
};
std::array<PhasePair, 4> phase_pairs(const PeriodicCoefficient& p,
                                     const PeriodicCoefficient& q,
                                     std::complex<double> z);

/// Leading term of the remainder coefficient gamma at stage k (1..4),
/// variant 1 or 2, evaluated at z = pi/2 + pi n.
std::complex<double> gamma_leading(const PeriodicCoefficient& p,
                                   const PeriodicCoefficient& q, int k,
                                   int variant, int n);

/// Closed asymptotic model of D near z = pi/2 + pi n:
/// D ~ -(e^{-i beta z} cos(alpha z)/2)(1 + kappa_4/z^4
///      + p'(0)(1 - tan(alpha z))/(8 z^3)).
struct AsymptoticCharValue {
  std::complex<double> mantissa;
  double log_scale = 0.0;
  int n = 0;              ///< nearest index, round((Re z - pi/2)/pi)
  bool near_zero = false; ///< |cos(alpha z)| below 1e-3 after scaling
};
AsymptoticCharValue char_asymptotic(const PeriodicCoefficient& p,
                                    const PeriodicCoefficient& q,
                                    std::complex<double> lambda);

/// Least-squares slope of log|residual| against log n. Points whose
/// residual sits under the floor 64 * eps * |mu| are dropped; returns
/// nullopt when fewer than three survive.
std::optional<double> fit_residual_order(const std::vector<int>& indices,
                                         const std::vector<double>& residuals,
                                         const std::vector<double>& mus);

}  // namespace spectra4

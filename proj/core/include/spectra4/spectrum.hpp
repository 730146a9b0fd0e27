#pragma once

#include <complex>
#include <vector>

#include "spectra4/characteristic.hpp"
#include "spectra4/coefficients.hpp"

namespace spectra4 {

/// One computed eigenvalue and its bookkeeping.
struct EigenvalueRecord {
  int n = 0;           ///< index in the natural ordering mu_0 < mu_1 < ...
  double z = 0.0;      ///< quartic root, mu = z^4
  double mu = 0.0;
  double residual = 0.0;      ///< |D| at the accepted root (scaled mantissa)
  int iterations = 0;
  bool low_region = false;    ///< found by grid scan rather than bracketing
};

/// Tunable search parameters; defaults match the shipped configuration.
struct SearchPlan {
  double ode_tol = 1e-12;
  double z_abs_tol = 1e-11;
  int crossover_index = 4;    ///< below this n, grid-scan + contour count
  int threads = 1;
  Precision precision = Precision::kDouble;
};

/// Argument-principle zero count of D inside the z-plane disk
/// |z - (pi/2 + pi n)| = pi/4. Adaptive sampling: 64 points, doubled until
/// every phase increment is below pi/2. Throws ContourTooClose when the
/// normalized |mantissa| on the contour dips under residual_tol.
int count_zeros_in_disk(const PeriodicCoefficient& p,
                        const PeriodicCoefficient& q, int n,
                        const SearchPlan& plan, double residual_tol = 1e-8);

/// Zero count of D(lambda) in |lambda| < (pi/2 + pi(N + 1/2))^4, counted on
/// the image contour in the z quarter-plane. Expect N + 1 for real p, q.
int count_zeros_in_ball(const PeriodicCoefficient& p,
                        const PeriodicCoefficient& q, int N,
                        const SearchPlan& plan, double residual_tol = 1e-8);

/// Eigenvalues mu_n for n in [n_lo, n_hi]. High indices bracket the sign
/// change of Re D on (pi/2 + pi n - pi/4, pi/2 + pi n + pi/4) and polish by
/// safeguarded secant; indices below the crossover come from a pi/16 grid
/// scan, cross-checked against count_zeros_in_ball. Throws CountMismatch
/// when the low-region tally and the contour count disagree.
std::vector<EigenvalueRecord> solve_range(const PeriodicCoefficient& p,
                                          const PeriodicCoefficient& q,
                                          int n_lo, int n_hi,
                                          const SearchPlan& plan);

}  // namespace spectra4

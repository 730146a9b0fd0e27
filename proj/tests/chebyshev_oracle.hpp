#pragma once

#include <vector>

#include "spectra4/coefficients.hpp"

namespace spectra4::testing {

/// Independent discretization of the quartic eigenvalue problem on [0, 1]:
/// Chebyshev collocation of the companion system (y, y', y'', y''' + p y')
/// with the four boundary rows imposed directly, solved as a dense
/// generalized eigenproblem. Returns the `count` smallest real eigenvalues
/// in increasing order. `modes` is the Chebyshev degree (>= 200 for the
/// accuracy promised here).
std::vector<double> collocation_eigenvalues(const PeriodicCoefficient& p,
                                            const PeriodicCoefficient& q,
                                            int count, int modes = 200);

}  // namespace spectra4::testing

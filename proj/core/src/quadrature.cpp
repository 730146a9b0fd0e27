#include "spectra4/quadrature.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>

namespace spectra4 {

namespace {

// 16-point Gauss-Legendre abscissae/weights on [-1, 1] (positive half).
constexpr std::array<double, 8> kNodes = {
    0.09501250983763744, 0.28160355077925891, 0.45801677765722739,
    0.61787624440264375, 0.75540440835500303, 0.86563120238783174,
    0.94457502307323258, 0.98940093499164993};
constexpr std::array<double, 8> kWeights = {
    0.18945061045506850, 0.18260341504492359, 0.16915651939500254,
    0.14959598881657673, 0.12462897125553387, 0.09515851168249278,
    0.06225352393864789, 0.02715245941175409};

}  // namespace

double gauss_legendre_16(const std::function<double(double)>& f, double a,
                         double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < 8; ++i) {
    const double dx = half * kNodes[i];
    sum += kWeights[i] * (f(mid - dx) + f(mid + dx));
  }
  return half * sum;
}

double composite_gauss_legendre(const std::function<double(double)>& f,
                                const std::vector<double>& breakpoints) {
  if (breakpoints.size() < 2) {
    throw std::invalid_argument("composite rule needs at least one panel");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    sum += gauss_legendre_16(f, breakpoints[i], breakpoints[i + 1]);
  }
  return sum;
}

std::vector<double> geometric_endpoint_breakpoints(int panels_per_half) {
  if (panels_per_half < 1) {
    throw std::invalid_argument("panels_per_half must be positive");
  }
  // Panel widths halve toward each endpoint; innermost panel touches 0 (and
  // symmetrically 1), so the first breakpoint after 0 is 0.5 * 2^{1-m}.
  std::vector<double> left;
  left.push_back(0.0);
  double edge = 0.5;
  for (int i = 1; i < panels_per_half; ++i) edge *= 0.5;
  // edge = 2^{-panels_per_half} * ... ; accumulate from the inside out.
  double x = 0.5;
  std::vector<double> inner;
  for (int i = 0; i < panels_per_half; ++i) {
    inner.push_back(x);
    x *= 0.5;
  }
  // inner = {1/2, 1/4, ..., 2^{-m}}, descending toward 0.
  for (auto it = inner.rbegin(); it != inner.rend(); ++it) left.push_back(*it);

  std::vector<double> bps = left;  // [0, 2^{-m}, ..., 1/4, 1/2]
  for (auto it = left.rbegin() + 1; it != left.rend(); ++it) {
    bps.push_back(1.0 - *it);
  }
  return bps;
}

std::vector<double> uniform_breakpoints(int panels) {
  if (panels < 1) throw std::invalid_argument("panels must be positive");
  std::vector<double> bps(panels + 1);
  for (int i = 0; i <= panels; ++i) {
    bps[i] = static_cast<double>(i) / panels;
  }
  return bps;
}

}  // namespace spectra4

#pragma once

#include <functional>
#include <vector>

namespace spectra4 {

/// 16-point Gauss-Legendre rule on [a, b].
double gauss_legendre_16(const std::function<double(double)>& f, double a,
                         double b);

/// Composite rule over explicit breakpoints.
double composite_gauss_legendre(const std::function<double(double)>& f,
                                const std::vector<double>& breakpoints);

/// Breakpoints of [0, 1] geometrically refined (ratio 1/2) toward both
/// endpoints, `panels_per_half` panels on each half.
std::vector<double> geometric_endpoint_breakpoints(int panels_per_half);

/// Uniform breakpoints of [0, 1] into `panels` panels.
std::vector<double> uniform_breakpoints(int panels);

}  // namespace spectra4

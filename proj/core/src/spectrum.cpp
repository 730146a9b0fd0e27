#include "spectra4/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <thread>

#include "spectra4/errors.hpp"

namespace spectra4 {

namespace {

constexpr double kPi = std::numbers::pi;

// Winding number of f around a closed loop, by phase accumulation over an
// adaptively refined sample set. `f(t)` is the normalized mantissa at
// parameter t in [0, 1).
int winding_number(const std::function<std::complex<double>(double)>& f,
                   double residual_tol) {
  int M = 64;
  std::vector<std::complex<double>> vals(M);
  for (int j = 0; j < M; ++j) vals[j] = f(static_cast<double>(j) / M);

  for (;;) {
    double min_mag = 1e300;
    double max_step = 0.0;
    double total = 0.0;
    for (int j = 0; j < M; ++j) {
      min_mag = std::min(min_mag, std::abs(vals[j]));
      const std::complex<double> a = vals[j];
      const std::complex<double> b = vals[(j + 1) % M];
      const double d = std::arg(b / a);  // principal increment in (-pi, pi]
      max_step = std::max(max_step, std::abs(d));
      total += d;
    }
    if (min_mag < residual_tol) {
      throw ContourTooClose("characteristic function too small on contour",
                            min_mag);
    }
    if (max_step < kPi / 2) {
      return static_cast<int>(std::lround(total / (2 * kPi)));
    }
    if (M >= 65536) {
      throw ContourTooClose("contour sampling failed to settle", min_mag);
    }
    // Double the sampling, keeping the already computed points.
    std::vector<std::complex<double>> next(2 * M);
    for (int j = 0; j < M; ++j) {
      next[2 * j] = vals[j];
      next[2 * j + 1] = f((j + 0.5) / M);
    }
    vals = std::move(next);
    M *= 2;
  }
}

double d_real(const PeriodicCoefficient& p, const PeriodicCoefficient& q,
              double z, const SearchPlan& plan, double* mag = nullptr) {
  const double lam = z * z * z * z;
  const CharValue v = char_det(p, q, lam, plan.ode_tol, plan.precision);
  if (mag) *mag = std::abs(v.mantissa);
  return v.mantissa.real();
}

// Bisection to a coarse interval, then secant with bracket safeguard.
EigenvalueRecord polish_root(const PeriodicCoefficient& p,
                             const PeriodicCoefficient& q, double a, double b,
                             double fa, double fb, const SearchPlan& plan) {
  EigenvalueRecord rec;
  int iters = 0;
  while (b - a > 1e-3) {
    const double m = 0.5 * (a + b);
    const double fm = d_real(p, q, m, plan);
    ++iters;
    if ((fa < 0) == (fm < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
      fb = fm;
    }
  }
  while (b - a > plan.z_abs_tol && iters < 200) {
    double m = (fb != fa) ? b - fb * (b - a) / (fb - fa) : 0.5 * (a + b);
    // Keep the iterate strictly interior; otherwise bisect.
    const double margin = 0.01 * (b - a);
    if (!(m > a + margin && m < b - margin)) m = 0.5 * (a + b);
    const double fm = d_real(p, q, m, plan);
    ++iters;
    if (fm == 0.0) {
      a = b = m;
      fa = fb = fm;
      break;
    }
    if ((fa < 0) == (fm < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
      fb = fm;
    }
  }
  rec.z = 0.5 * (a + b);
  rec.mu = std::pow(rec.z, 4);
  double mag = 0.0;
  d_real(p, q, rec.z, plan, &mag);
  rec.residual = mag;
  rec.iterations = iters;
  return rec;
}

EigenvalueRecord solve_one_high(const PeriodicCoefficient& p,
                                const PeriodicCoefficient& q, int n,
                                const SearchPlan& plan) {
  const double c = kPi / 2 + kPi * n;
  double a = c - kPi / 4, b = c + kPi / 4;
  double fa = d_real(p, q, a, plan);
  double fb = d_real(p, q, b, plan);
  if ((fa < 0) == (fb < 0)) {
    // Subdivide until a sign change shows up.
    const int parts = 16;
    bool found = false;
    double px = a, pf = fa;
    for (int i = 1; i <= parts; ++i) {
      const double x = a + (b - a) * i / parts;
      const double fx = d_real(p, q, x, plan);
      if ((pf < 0) != (fx < 0)) {
        a = px;
        fa = pf;
        b = x;
        fb = fx;
        found = true;
        break;
      }
      px = x;
      pf = fx;
    }
    if (!found) {
      throw CountMismatch("no sign change of D in the expected z-interval", 1,
                          0);
    }
  }
  EigenvalueRecord rec = polish_root(p, q, a, b, fa, fb, plan);
  rec.n = n;
  return rec;
}

// Deterministic parallel map over indices; each worker fills its own slots.
template <class F>
void parallel_for_index(int count, int threads, const F& body) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  const int nthreads = std::min(threads, count);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(nthreads);
  for (int t = 0; t < nthreads; ++t) {
    pool.emplace_back([&, t]() {
      try {
        for (int i = t; i < count; i += nthreads) body(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

int count_zeros_in_disk(const PeriodicCoefficient& p,
                        const PeriodicCoefficient& q, int n,
                        const SearchPlan& plan, double residual_tol) {
  const double c = kPi / 2 + kPi * n;
  const double r = kPi / 4;
  auto f = [&](double t) {
    const std::complex<double> z =
        c + r * std::exp(std::complex<double>(0.0, 2 * kPi * t));
    const std::complex<double> z2 = z * z;
    return char_det(p, q, z2 * z2, plan.ode_tol, plan.precision).mantissa;
  };
  return winding_number(f, residual_tol);
}

int count_zeros_in_ball(const PeriodicCoefficient& p,
                        const PeriodicCoefficient& q, int N,
                        const SearchPlan& plan, double residual_tol) {
  const double R = kPi / 2 + kPi * (N + 0.5);
  const double R4 = std::pow(R, 4);
  auto f = [&](double t) {
    const std::complex<double> lam =
        R4 * std::exp(std::complex<double>(0.0, 2 * kPi * t));
    return char_det(p, q, lam, plan.ode_tol, plan.precision).mantissa;
  };
  return winding_number(f, residual_tol);
}

std::vector<EigenvalueRecord> solve_range(const PeriodicCoefficient& p,
                                          const PeriodicCoefficient& q,
                                          int n_lo, int n_hi,
                                          const SearchPlan& plan) {
  if (n_lo < 0 || n_hi < n_lo) {
    throw ConfigError("invalid index range");
  }
  std::vector<EigenvalueRecord> out;

  const int crossover = plan.crossover_index;
  if (n_lo < crossover) {
    // Low region: pi/16 grid over (0, pi/2 + pi*crossover - pi/4], all
    // sign changes refined, tally checked against the contour count.
    const double z_max = kPi / 2 + kPi * crossover - kPi / 4;
    const double step = kPi / 16;
    std::vector<EigenvalueRecord> low;
    double px = 1e-4;
    double pf = d_real(p, q, px, plan);
    for (double x = step; x <= z_max + 1e-12; x += step) {
      const double fx = d_real(p, q, std::min(x, z_max), plan);
      if ((pf < 0) != (fx < 0)) {
        low.push_back(polish_root(p, q, px, std::min(x, z_max), pf, fx, plan));
      }
      px = std::min(x, z_max);
      pf = fx;
    }
    const int expected = count_zeros_in_ball(p, q, crossover - 1, plan);
    if (static_cast<int>(low.size()) != expected) {
      throw CountMismatch(
          "low-region grid scan and argument-principle count disagree",
          expected, static_cast<int>(low.size()));
    }
    std::sort(low.begin(), low.end(),
              [](const auto& a, const auto& b) { return a.z < b.z; });
    for (int i = 0; i < static_cast<int>(low.size()); ++i) {
      low[i].n = i;
      low[i].low_region = true;
      if (i >= n_lo && i <= n_hi) out.push_back(low[i]);
    }
  }

  const int hi_start = std::max(n_lo, crossover);
  if (n_hi >= hi_start) {
    const int count = n_hi - hi_start + 1;
    std::vector<EigenvalueRecord> high(count);
    parallel_for_index(count, plan.threads, [&](int i) {
      high[i] = solve_one_high(p, q, hi_start + i, plan);
    });
    out.insert(out.end(), high.begin(), high.end());
  }

  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.n < b.n; });
  return out;
}

}  // namespace spectra4

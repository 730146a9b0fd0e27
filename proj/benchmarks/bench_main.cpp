#include <benchmark/benchmark.h>

#include <cmath>

#include "spectra4/asymptotics.hpp"
#include "spectra4/birkhoff.hpp"
#include "spectra4/characteristic.hpp"
#include "spectra4/ode_core.hpp"
#include "spectra4/spectrum.hpp"

namespace {

using namespace spectra4;

PeriodicCoefficient bench_p() {
  return PeriodicCoefficient(0.0, {{1, 0.0, 1.0}, {2, 0.3, 0.0}});
}

PeriodicCoefficient bench_q() {
  return PeriodicCoefficient(0.0, {{1, 1.0, 0.0}, {3, 0.0, 0.2}});
}

// Full 4x4 fundamental-matrix integration across one period.
void BM_IntegrateFundamental(benchmark::State& state) {
  const auto p = bench_p();
  const auto q = bench_q();
  const double z = static_cast<double>(state.range(0));
  const double lam = z * z * z * z;
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_fundamental(p, q, lam, 1e-12));
  }
}
BENCHMARK(BM_IntegrateFundamental)->Arg(4)->Arg(16)->Arg(64);

// Characteristic determinant via the six-minor system.
void BM_CharDet(benchmark::State& state) {
  const auto p = bench_p();
  const auto q = bench_q();
  const double z = static_cast<double>(state.range(0));
  const double lam = z * z * z * z;
  for (auto _ : state) {
    benchmark::DoNotOptimize(char_det(p, q, lam, 1e-12));
  }
}
BENCHMARK(BM_CharDet)->Arg(4)->Arg(16)->Arg(64);

// Boundary-layer correction integrals for one index.
void BM_Kappa(benchmark::State& state) {
  const auto p = bench_p();
  const auto q = bench_q();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int j = 1; j <= 4; ++j) {
      benchmark::DoNotOptimize(kappa(p, q, j, n));
    }
  }
}
BENCHMARK(BM_Kappa)->Arg(2)->Arg(10)->Arg(40);

// One eigenvalue localized and polished from its disk.
void BM_SolveOne(benchmark::State& state) {
  const auto p = bench_p();
  const auto q = bench_q();
  const int n = static_cast<int>(state.range(0));
  SearchPlan plan;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_range(p, q, n, n, plan));
  }
}
BENCHMARK(BM_SolveOne)->Arg(6)->Arg(15);

// Exact-arithmetic identity suite.
void BM_VerifyAlgebra(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& check : registered_identities()) {
      benchmark::DoNotOptimize(check.run());
    }
  }
}
BENCHMARK(BM_VerifyAlgebra);

}  // namespace

BENCHMARK_MAIN();

#include "conicqed/opse.hpp"
#include "conicqed/specfun.hpp"
#include "conicqed/tpse.hpp"

#include <benchmark/benchmark.h>

using namespace conicqed;

static void BM_BesselSeriesRegion(benchmark::State &state) {
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_j(4.5, x));
    x = x < 2.0 ? x + 1e-3 : 0.5;
  }
}
BENCHMARK(BM_BesselSeriesRegion);

static void BM_BesselMillerRegion(benchmark::State &state) {
  double x = 15.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_j(static_cast<double>(state.range(0)) + 0.3, x));
    x = x < 40.0 ? x + 1e-2 : 15.0;
  }
}
BENCHMARK(BM_BesselMillerRegion)->Arg(1)->Arg(10)->Arg(40);

static void BM_BesselTriplet(benchmark::State &state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_j_triplet(7.5, 12.3));
  }
}
BENCHMARK(BM_BesselTriplet);

static void BM_PurcellAll(benchmark::State &state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(purcell_all(1.5, x));
  }
}
BENCHMARK(BM_PurcellAll)->Arg(1)->Arg(5)->Arg(20)->Arg(50)->Unit(benchmark::kMicrosecond);

static void BM_SpectralEnhancement(benchmark::State &state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectral_enhancement_ss(2.5, 4.0, 0.3));
  }
}
BENCHMARK(BM_SpectralEnhancement)->Unit(benchmark::kMicrosecond);

static void BM_TotalRateRatio(benchmark::State &state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(total_rate_ratio(1.5, 4.0));
  }
}
BENCHMARK(BM_TotalRateRatio)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

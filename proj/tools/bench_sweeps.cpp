// Serial reference vs OpenMP kernel timings for the three sweeps.
#include <benchmark/benchmark.h>

#include "polya5/analytics.hpp"

namespace {

void BM_curve_scan_serial(benchmark::State& state) {
    const auto& f = polya5::lehmer_quartic();
    for (auto _ : state) {
        auto pts = polya5::curve_integral_points_serial(f);
        benchmark::DoNotOptimize(pts);
    }
}
BENCHMARK(BM_curve_scan_serial)->Unit(benchmark::kMillisecond);

void BM_curve_scan_omp(benchmark::State& state) {
    const auto& f = polya5::lehmer_quartic();
    for (auto _ : state) {
        auto pts = polya5::curve_integral_points(f);
        benchmark::DoNotOptimize(pts);
    }
}
BENCHMARK(BM_curve_scan_omp)->Unit(benchmark::kMillisecond);

void BM_density_serial(benchmark::State& state) {
    const auto limit = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto r = polya5::cubefree_density_serial(limit, 50);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_density_serial)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_density_omp(benchmark::State& state) {
    const auto limit = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto r = polya5::cubefree_density(limit, 50);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_density_omp)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_omega_sweep_serial(benchmark::State& state) {
    const auto limit = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto s = polya5::omega_over_primes_serial(limit);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_omega_sweep_serial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_omega_sweep_omp(benchmark::State& state) {
    const auto limit = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto s = polya5::omega_over_primes(limit);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_omega_sweep_omp)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

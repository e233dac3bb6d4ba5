// Serial reference kernels against their OpenMP counterparts.
//
//   ./build/bench/rotset_bench --benchmark_filter=Oracle

#include <benchmark/benchmark.h>

#include "rotset/almost_periodic.hpp"
#include "rotset/oracle.hpp"
#include "rotset/torus.hpp"

using namespace rotset;

namespace {

SftSystem bench_system() {
  return make_system({{0, 1, 2}, {0, 2, 3}, {1, 3}, {0, 1, 2, 3}}, {{0, 0}, {2, -1}, {-1, 3}, {1, 1}});
}

void BM_OracleSerial(benchmark::State& state) {
  const SftSystem sys = bench_system();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::word_sums_serial(sys, n, WordClass::All));
}

void BM_OracleParallel(benchmark::State& state) {
  const SftSystem sys = bench_system();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::word_sums_parallel(sys, n, WordClass::All));
}

void BM_CountOnesSerial(benchmark::State& state) {
  const ApParams p = ap_params(Rational(3, 10), 6);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_ones_serial(p, 0, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CountOnesParallel(benchmark::State& state) {
  const ApParams p = ap_params(Rational(3, 10), 6);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_ones_parallel(p, 0, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_PhiCloudSerial(benchmark::State& state) {
  const TorusLift lift(StandardLift{});
  const auto starts = unit_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::phi_cloud_serial(lift, starts, 1000));
}

void BM_PhiCloudParallel(benchmark::State& state) {
  const TorusLift lift(StandardLift{});
  const auto starts = unit_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::phi_cloud_parallel(lift, starts, 1000));
}

}  // namespace

BENCHMARK(BM_OracleSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountOnesSerial)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountOnesParallel)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PhiCloudSerial)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PhiCloudParallel)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

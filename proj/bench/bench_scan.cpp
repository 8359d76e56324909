#include <benchmark/benchmark.h>

#include "cwsurgery/dedekind.hpp"
#include "cwsurgery/obstruction.hpp"

using namespace cwsurgery;

static void BM_GridSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scan_theorem_grid_serial(state.range(0)));
}
BENCHMARK(BM_GridSerial)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

static void BM_GridParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scan_theorem_grid(state.range(0)));
}
BENCHMARK(BM_GridParallel)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

static void BM_ScanSerial(benchmark::State& state) {
  const Integer p(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(theorem_main_scan_serial(p, 1));
}
BENCHMARK(BM_ScanSerial)->Arg(199)->Arg(1009)->Unit(benchmark::kMillisecond);

static void BM_ScanParallel(benchmark::State& state) {
  const Integer p(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(theorem_main_scan(p, 1));
}
BENCHMARK(BM_ScanParallel)->Arg(199)->Arg(1009)->Unit(benchmark::kMillisecond);

static void BM_DedekindNaive(benchmark::State& state) {
  const DedekindArgs args(Integer(state.range(0) - 2), Integer(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dedekind_sum_naive(args));
}
BENCHMARK(BM_DedekindNaive)->Arg(1001)->Arg(100001);

static void BM_DedekindReciprocity(benchmark::State& state) {
  const DedekindArgs args(Integer(state.range(0) - 2), Integer(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dedekind_sum(args));
}
BENCHMARK(BM_DedekindReciprocity)->Arg(1001)->Arg(100001);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "dpz/dpz.hpp"

namespace {

void BM_Roots(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dpz::roots(n));
}
BENCHMARK(BM_Roots)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

void BM_WeylOrder(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dpz::weyl_order(n));
}
BENCHMARK(BM_WeylOrder)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

void BM_CheckReducibleGeiser(benchmark::State& state) {
  auto g = dpz::geiser().involution;
  for (auto _ : state) benchmark::DoNotOptimize(dpz::check_reducible(g));
}
BENCHMARK(BM_CheckReducibleGeiser)->Unit(benchmark::kMillisecond);

void BM_CheckReducibleBertini(benchmark::State& state) {
  auto g = dpz::bertini().involution;
  for (auto _ : state) benchmark::DoNotOptimize(dpz::check_reducible(g));
}
BENCHMARK(BM_CheckReducibleBertini)->Unit(benchmark::kMillisecond);

void BM_CheckReducibleReflection(benchmark::State& state) {
  auto l = dpz::del_pezzo(8);
  dpz::Vector r(9, 0);
  r[1] = 1;
  r[2] = -1;
  auto g = dpz::make_isometry(l, dpz::reflection(l, r));
  for (auto _ : state) benchmark::DoNotOptimize(dpz::check_reducible(g));
}
BENCHMARK(BM_CheckReducibleReflection)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  auto g = dpz::make_isometry(dpz::del_pezzo(7), dpz::IntMatrix::identity(8));
  for (auto _ : state) benchmark::DoNotOptimize(dpz::decompose(g));
}
BENCHMARK(BM_Decompose)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dpz::involution_catalog(n));
}
BENCHMARK(BM_Classify)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "fanoturan/kernels.hpp"
#include "fanoturan/multigraph.hpp"

using namespace fanoturan;

namespace {

void BM_TransversalsSerial(benchmark::State& state) {
  const auto fano = fano_copy_masks(7);
  for (auto _ : state) benchmark::DoNotOptimize(transversals_serial(35, static_cast<int>(state.range(0)), fano));
}
BENCHMARK(BM_TransversalsSerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_TransversalsParallel(benchmark::State& state) {
  const auto fano = fano_copy_masks(7);
  TransversalOptions o;
  o.prune = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(transversals(35, static_cast<int>(state.range(0)), fano, o));
}
BENCHMARK(BM_TransversalsParallel)->Args({4, 0})->Args({5, 0})->Args({4, 1})->Args({5, 1})->Unit(benchmark::kMillisecond);

void BM_EightVertexComplements(benchmark::State& state) {
  const auto fano = fano_copy_masks(8);
  for (auto _ : state) benchmark::DoNotOptimize(transversals(56, static_cast<int>(state.range(0)), fano));
}
BENCHMARK(BM_EightVertexComplements)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_LinkScanSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(link_scan_serial(11, 18));
}
BENCHMARK(BM_LinkScanSerial)->Unit(benchmark::kMillisecond);

void BM_LinkScanParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(link_scan(11, 18));
}
BENCHMARK(BM_LinkScanParallel)->Unit(benchmark::kMillisecond);

void BM_FourVertexSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(four_vertex_scan_serial({}));
}
BENCHMARK(BM_FourVertexSerial)->Iterations(1)->Unit(benchmark::kMillisecond);

void BM_FourVertexParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(four_vertex_scan({}));
}
BENCHMARK(BM_FourVertexParallel)->Iterations(1)->Unit(benchmark::kMillisecond);

void BM_MaxEdgesSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(max_edges_no_crossing_serial(static_cast<int>(state.range(0)), 5));
}
BENCHMARK(BM_MaxEdgesSerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_MaxEdgesParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(max_edges_no_crossing(static_cast<int>(state.range(0)), 5));
}
BENCHMARK(BM_MaxEdgesParallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

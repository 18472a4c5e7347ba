// Hot kernels: closure fixed points, the exact Z solver and the
// independent set branch and bound.

#include <random>

#include <benchmark/benchmark.h>

#include "zf/cover.hpp"
#include "zf/enumerate.hpp"
#include "zf/families.hpp"
#include "zf/forcing.hpp"

namespace {

zf::Graph petersen() {
  return zf::Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                        {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                        {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

void BM_closure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(12345);
  zf::Graph g = zf::random_graph(n, 3.0 / n, rng);
  zf::VertexSet seed;
  for (int v = 0; v < n / 4 + 1; ++v) seed.set(v);
  for (auto _ : state)
    benchmark::DoNotOptimize(zf::closure_set(g, seed));
}
BENCHMARK(BM_closure)->Arg(32)->Arg(64)->Arg(128);

void BM_zero_forcing_petersen(benchmark::State& state) {
  zf::Graph g = petersen();
  for (auto _ : state)
    benchmark::DoNotOptimize(zf::zero_forcing_number(g).number);
}
BENCHMARK(BM_zero_forcing_petersen);

void BM_zero_forcing_construction2(benchmark::State& state) {
  zf::Graph g = zf::construction2(3, {2, 2, 2});
  for (auto _ : state)
    benchmark::DoNotOptimize(zf::zero_forcing_number(g).number);
}
BENCHMARK(BM_zero_forcing_construction2);

void BM_max_independent_set(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(777);
  zf::Graph g = zf::random_graph(n, 0.3, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(zf::max_independent_set(g).count());
}
BENCHMARK(BM_max_independent_set)->Arg(20)->Arg(28);

void BM_enumerate_connected7(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(zf::connected_graphs(7).size());
}
BENCHMARK(BM_enumerate_connected7);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "brick/arrangement.hpp"
#include "brick/enumeration.hpp"
#include "brick/network.hpp"
#include "brick/polytope.hpp"

namespace {

void bm_greedy(benchmark::State& state) {
  brick::Network net = brick::kernel(brick::bubble_network(static_cast<int>(state.range(0))), 2);
  for (auto _ : state) benchmark::DoNotOptimize(brick::greedy(net));
}
BENCHMARK(bm_greedy)->Arg(9)->Arg(12);

void bm_all_arrangements(benchmark::State& state) {
  brick::Network net = brick::kernel(brick::bubble_network(static_cast<int>(state.range(0))), 2);
  for (auto _ : state) benchmark::DoNotOptimize(brick::all_arrangements(net));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<long long>(brick::all_arrangements(net).size()));
}
BENCHMARK(bm_all_arrangements)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

void bm_flip_graph(benchmark::State& state) {
  brick::Network net = brick::kernel(brick::bubble_network(static_cast<int>(state.range(0))), 1);
  for (auto _ : state) benchmark::DoNotOptimize(brick::flip_graph(net));
}
BENCHMARK(bm_flip_graph)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void bm_build_polytope(benchmark::State& state) {
  brick::Network net = brick::kernel(brick::bubble_network(static_cast<int>(state.range(0))), 2);
  for (auto _ : state) benchmark::DoNotOptimize(brick::build_polytope(net));
}
BENCHMARK(bm_build_polytope)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

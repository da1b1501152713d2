#include <benchmark/benchmark.h>

#include "shannon/deterministic.hpp"
#include "shannon/local_sim.hpp"
#include "shannon/vizing.hpp"

namespace {

using namespace shannon;

constexpr int kDelta = 4;
constexpr int kMult = 2;

Multigraph graph_for(const benchmark::State& state) {
  return random_multigraph(static_cast<int>(state.range(0)), kDelta, kMult, 1);
}

void BM_Deterministic(benchmark::State& state) {
  Multigraph g = graph_for(state);
  int iterations = 0;
  for (auto _ : state) {
    DeterministicResult r = color_deterministic(g);
    iterations = r.iterations;
    benchmark::DoNotOptimize(r.coloring.colored_count());
  }
  state.counters["iterations"] = iterations;
  state.SetItemsProcessed(state.iterations() * g.num_edges());
}
BENCHMARK(BM_Deterministic)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond);

void BM_Sequential(benchmark::State& state) {
  Multigraph g = graph_for(state);
  SequentialParams p;
  p.seed = 1;
  double t_over_m = 0;
  for (auto _ : state) {
    SequentialResult r = color_sequential_random(g, p);
    t_over_m = static_cast<double>(r.total_iterations) / g.num_edges();
    benchmark::DoNotOptimize(r.coloring.colored_count());
  }
  state.counters["T/m"] = t_over_m;
  state.SetItemsProcessed(state.iterations() * g.num_edges());
}
BENCHMARK(BM_Sequential)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond);

void BM_Distributed(benchmark::State& state) {
  Multigraph g = graph_for(state);
  DistributedParams p;
  p.seed = 1;
  int stages = 0;
  for (auto _ : state) {
    DistributedResult r = color_distributed(g, p);
    stages = r.stages;
    benchmark::DoNotOptimize(r.coloring.colored_count());
  }
  state.counters["stages"] = stages;
  state.SetItemsProcessed(state.iterations() * g.num_edges());
}
BENCHMARK(BM_Distributed)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond);

void BM_Vizing(benchmark::State& state) {
  Multigraph g = graph_for(state);
  for (auto _ : state) {
    PartialColoring phi = color_vizing(g);
    benchmark::DoNotOptimize(phi.colored_count());
  }
  state.SetItemsProcessed(state.iterations() * g.num_edges());
}
BENCHMARK(BM_Vizing)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond);

}  // namespace

#include <benchmark/benchmark.h>

#include <vector>

#include "shannon/mssa.hpp"

namespace {

using namespace shannon;

// Proper partial coloring from a random greedy pass, with the edges that
// found no free color left blank.
PartialColoring greedy_partial(const Multigraph& g, Rng& rng) {
  PartialColoring phi(g, shannon_bound(g.max_degree()));
  std::vector<Color> free;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    free.clear();
    for (Color c = 0; c < phi.num_colors(); ++c) {
      if (phi.missing(g.first(e), c) && phi.missing(g.second(e), c)) free.push_back(c);
    }
    if (!free.empty()) phi.assign(e, free[rng.below(free.size())]);
  }
  return phi;
}

struct Fixture {
  Multigraph g;
  PartialColoring phi;
  std::vector<EdgeId> blank;

  explicit Fixture(int delta) : g(random_multigraph(4096, delta, 2, 5)), phi(g, 1) {
    Rng rng(5);
    phi = greedy_partial(g, rng);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (!phi.colored(e)) blank.push_back(e);
    }
  }
};

void BM_ShannonChain(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    EdgeId e = f.blank[i++ % f.blank.size()];
    ShannonChain c = shannon_chain(f.phi, e, f.g.min_end(e));
    benchmark::DoNotOptimize(c.path.length());
  }
}
BENCHMARK(BM_ShannonChain)->Arg(4)->Arg(8)->Arg(16);

void BM_Mssa(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)));
  MssaParams p;
  p.ell = 3;
  std::size_t i = 0;
  for (auto _ : state) {
    EdgeId e = f.blank[i++ % f.blank.size()];
    Rng rng(i);
    MssaResult r = mssa(f.phi, e, f.g.first(e), p, rng);
    benchmark::DoNotOptimize(r.record.iterations);
  }
}
BENCHMARK(BM_Mssa)->Arg(4)->Arg(8)->Arg(16);

void BM_AugmentAndUndo(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    EdgeId e = f.blank[i++ % f.blank.size()];
    std::vector<EdgeId> edges = shannon_chain(f.phi, e, f.g.min_end(e)).edges();
    augment(f.phi, edges);
    unaugment(f.phi, edges);
  }
}
BENCHMARK(BM_AugmentAndUndo)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

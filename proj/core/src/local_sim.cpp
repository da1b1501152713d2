#include "shannon/local_sim.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace shannon {

std::int64_t ConflictGraph::num_edges() const {
  std::int64_t total = 0;
  for (const auto& a : adj) total += static_cast<std::int64_t>(a.size());
  return total / 2;
}

std::vector<int> random_independent_set(const ConflictGraph& graph, Rng& rng) {
  std::vector<double> draw(graph.size());
  for (double& x : draw) x = rng.uniform01();
  std::vector<int> w;
  for (int v = 0; v < graph.size(); ++v) {
    bool top = std::all_of(graph.adj[v].begin(), graph.adj[v].end(), [&](int u) { return draw[v] > draw[u]; });
    if (top) w.push_back(v);
  }
  return w;
}

std::int64_t default_budget(int n) {
  if (n < 2) return 1;
  return static_cast<std::int64_t>(std::ceil(4.0 * std::log2(static_cast<double>(n))));
}

StageResult run_stage(PartialColoring& phi, int stage, int ell, std::int64_t budget,
                      const DistributedParams& params) {
  const Multigraph& g = phi.graph();
  StageResult st;
  st.stage = stage;
  st.base_hash_before = phi.fingerprint();
  MssaParams mp;
  mp.ell = ell;
  mp.max_iters = budget;
  mp.debug_invariants = params.debug_invariants;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (phi.colored(e)) continue;
    ++st.uncolored;
    Rng rng = Rng::stream(params.seed, static_cast<std::uint64_t>(stage) + 1, static_cast<std::uint64_t>(e));
    Vertex x = rng.below(2) == 0 ? g.first(e) : g.second(e);
    MssaResult r = mssa(phi, e, x, mp, rng);
    st.mssa_iterations += r.record.iterations;
    if (!r.chain) continue;
    st.survivors.push_back(e);
    st.pairs.push_back(final_pair(*r.chain));
    st.chains.push_back(std::move(*r.chain));
  }
  st.base_hash_after = phi.fingerprint();

  // Inverted index vertex -> chains through it, then pairwise conflicts.
  const int s = static_cast<int>(st.survivors.size());
  std::vector<std::vector<int>> through(g.num_vertices());
  for (int i = 0; i < s; ++i) {
    for (Vertex v : st.chains[i].vertices(g)) through[v].push_back(i);
  }
  st.conflicts.adj.assign(s, {});
  for (const auto& list : through) {
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t b = a + 1; b < list.size(); ++b) {
        st.conflicts.adj[list[a]].push_back(list[b]);
        st.conflicts.adj[list[b]].push_back(list[a]);
      }
    }
  }
  for (auto& a : st.conflicts.adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  st.conflict_edges = st.conflicts.num_edges();
  Rng pick = Rng::stream(params.seed, static_cast<std::uint64_t>(stage) + 1, ~std::uint64_t{0});
  st.independent = random_independent_set(st.conflicts, pick);
  st.rounds_charged = static_cast<std::int64_t>(kRoundsPerStage) * ell * budget;
  return st;
}

void augment_stage(PartialColoring& phi, StageResult& result) {
  const int before = phi.colored_count();
  for (int i : result.independent) augment(phi, result.chains[i].edges());
  result.colored = phi.colored_count() - before;
}

DistributedResult color_distributed(const Multigraph& g, const DistributedParams& params,
                                    const StageObserver& observer) {
  const int delta = g.max_degree();
  DistributedResult out{PartialColoring(g, std::max(1, shannon_bound(delta))), 0, 0, 0, 0, {}};
  PartialColoring& phi = out.coloring;
  out.ell = params.ell > 0 ? params.ell : default_ell(delta);
  out.budget = params.budget > 0 ? params.budget : default_budget(g.num_vertices());
  if (delta <= 1) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) phi.assign(e, 0);
    if (g.num_edges() > 0) {
      out.stages = 1;
      out.rounds = static_cast<std::int64_t>(kRoundsPerStage) * out.ell * out.budget;
    }
    return out;
  }
  int idle = 0;
  while (phi.uncolored_count() > 0) {
    StageResult st = run_stage(phi, out.stages, out.ell, out.budget, params);
    if (observer) observer(st, phi);
    augment_stage(phi, st);
    ++out.stages;
    out.rounds += st.rounds_charged;
    idle = st.colored == 0 ? idle + 1 : 0;
    st.chains.clear();
    st.chains.shrink_to_fit();
    st.conflicts.adj.clear();
    st.conflicts.adj.shrink_to_fit();
    out.stage_log.push_back(std::move(st));
    if (idle >= params.starvation_limit) {
      throw StarvationError("no progress for " + std::to_string(idle) + " consecutive stages");
    }
  }
  return out;
}

}  // namespace shannon

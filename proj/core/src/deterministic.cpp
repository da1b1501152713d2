#include "shannon/deterministic.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace shannon {

GammaPartition gamma_partition(const PartialColoring& phi, const std::vector<EdgeId>& uncolored) {
  const Multigraph& g = phi.graph();
  GammaPartition buckets;
  for (EdgeId e : uncolored) {
    FanChoice f = first_shannon_fan(phi, e, g.min_end(e));
    buckets[{std::min(f.first, f.second), std::max(f.first, f.second)}].push_back(e);
  }
  return buckets;
}

GammaPartition::const_iterator largest_bucket(const GammaPartition& buckets) {
  auto best = buckets.begin();
  for (auto it = buckets.begin(); it != buckets.end(); ++it) {
    if (it->second.size() > best->second.size()) best = it;
  }
  return best;
}

BatchStats augment_chain_set(PartialColoring& phi, const std::vector<EdgeId>& batch) {
  const Multigraph& g = phi.graph();
  BatchStats st;
  st.batch_size = static_cast<int>(batch.size());
  st.dom_before = phi.colored_count();
  std::vector<ShannonChain> chains;
  chains.reserve(batch.size());
  for (EdgeId e : batch) chains.push_back(shannon_chain(phi, e, g.min_end(e)));
  st.chains_computed = static_cast<int>(chains.size());

  // Epoch-stamped visited marks: a new batch only bumps the epoch.
  thread_local std::vector<std::uint32_t> stamp;
  thread_local std::uint32_t epoch = 0;
  if (stamp.size() < static_cast<std::size_t>(g.num_vertices()) || ++epoch == 0) {
    stamp.assign(std::max<std::size_t>(stamp.size(), g.num_vertices()), 0);
    epoch = 1;
  }
  std::vector<Vertex> gate;
  for (const ShannonChain& c : chains) {
    gate.assign({c.fan.pivot});
    for (EdgeId f : c.fan.edges) gate.push_back(g.other(f, c.fan.pivot));
    gate.push_back(c.path.v_end);
    if (std::any_of(gate.begin(), gate.end(), [&](Vertex v) { return stamp[v] == epoch; })) continue;
    std::vector<EdgeId> edges = c.edges();
    augment(phi, edges, {std::min(c.alpha, c.beta), std::max(c.alpha, c.beta)});
    for (Vertex v : gate) stamp[v] = epoch;
    ++st.chains_augmented;
    st.augmented.push_back(std::move(edges));
  }
  st.dom_after = phi.colored_count();
  const std::int64_t delta = g.max_degree();
  if (20 * delta * delta * (st.dom_after - st.dom_before) < st.batch_size) {
    throw InvariantError("batch of " + std::to_string(st.batch_size) + " colored only " +
                         std::to_string(st.dom_after - st.dom_before) + " edges");
  }
  return st;
}

DeterministicResult color_deterministic(const Multigraph& g, bool keep_chains) {
  const int delta = g.max_degree();
  DeterministicResult out{PartialColoring(g, std::max(1, shannon_bound(delta))), 0, {}};
  PartialColoring& phi = out.coloring;
  if (delta <= 1) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) phi.assign(e, 0);
    return out;
  }
  std::vector<EdgeId> uncolored(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) uncolored[e] = e;
  while (!uncolored.empty()) {
    GammaPartition buckets = gamma_partition(phi, uncolored);
    auto best = largest_bucket(buckets);
    BatchStats st = augment_chain_set(phi, best->second);
    st.pair = best->first;
    st.bucket_count = static_cast<int>(buckets.size());
    for (const auto& [pair, edges] : buckets) st.bucket_sizes.push_back(static_cast<int>(edges.size()));
    if (!keep_chains) st.augmented.clear();
    out.batches.push_back(std::move(st));
    ++out.iterations;
    std::erase_if(uncolored, [&](EdgeId e) { return phi.colored(e); });
  }
  return out;
}

}  // namespace shannon

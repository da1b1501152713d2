#include "shannon/vizing.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "shannon/chain_builders.hpp"

namespace shannon {

namespace {

// Per-neighbor candidate color lists, materialized on first touch.
class CandidateSets {
 public:
  explicit CandidateSets(const PartialColoring& phi) : phi_(phi) {}

  std::vector<Color>& of(Vertex z) {
    auto [it, fresh] = sets_.try_emplace(z);
    if (fresh) {
      it->second = phi_.missing_set(z);
      std::reverse(it->second.begin(), it->second.end());
    }
    return it->second;
  }

  // Removes and returns the minimum. Lists are stored in descending order.
  Color pop_min(Vertex z) {
    std::vector<Color>& s = of(z);
    if (s.empty()) throw InvariantError("candidate set of vertex " + std::to_string(z) + " is empty");
    Color c = s.back();
    s.pop_back();
    return c;
  }

  void remove(Vertex z, Color c) {
    std::vector<Color>& s = of(z);
    s.erase(std::remove(s.begin(), s.end(), c), s.end());
  }

 private:
  const PartialColoring& phi_;
  std::unordered_map<Vertex, std::vector<Color>> sets_;
};

VizingFanResult vizing_fan(const PartialColoring& phi, EdgeId e, Vertex x, Color beta) {
  const Multigraph& g = phi.graph();
  if (e < 0 || e >= g.num_edges()) throw PreconditionError("edge id out of range");
  if (phi.colored(e)) throw PreconditionError("fan must start at an uncolored edge");
  if (!g.incident(e, x)) throw PreconditionError("pivot is not an endpoint of the edge");
  Vertex y = g.other(e, x);
  CandidateSets cand(phi);
  if (beta != kBlank) cand.remove(y, beta);
  std::unordered_map<EdgeId, int> index;
  VizingFanResult out;
  out.fan.pivot = x;
  out.fan.edges.push_back(e);
  index[e] = 0;
  int k = 0;
  Vertex yk = y;
  while (k < g.degree(x)) {
    Color eta = cand.pop_min(yk);
    if (phi.missing(x, eta) || eta == beta) {
      out.color = eta;
      out.j = k + 1;
      return out;
    }
    ++k;
    EdgeId ek = phi.edge_at(x, eta);
    if (auto it = index.find(ek); it != index.end()) {
      out.color = eta;
      out.j = it->second;
      return out;
    }
    index[ek] = k;
    out.fan.edges.push_back(ek);
    yk = g.other(ek, x);
  }
  throw InvariantError("Vizing fan search at pivot " + std::to_string(x) + " exhausted its degree");
}

}  // namespace

VizingFanResult first_vizing_fan(const PartialColoring& phi, EdgeId e, Vertex x) {
  return vizing_fan(phi, e, x, kBlank);
}

VizingFanResult next_vizing_fan(const PartialColoring& phi, EdgeId e, Vertex x, Color beta) {
  const Multigraph& g = phi.graph();
  if (e < 0 || e >= g.num_edges() || !g.incident(e, x)) throw PreconditionError("bad edge or pivot");
  Vertex y = g.other(e, x);
  if (beta < 0 || beta >= phi.num_colors() || !phi.missing(y, beta)) {
    throw PreconditionError("beta must be missing at the non-pivot endpoint");
  }
  bool has_alpha = false;
  for (Color c = 0; c < phi.num_colors() && !has_alpha; ++c) has_alpha = phi.missing(x, c) && !phi.missing(y, c);
  if (!has_alpha) throw PreconditionError("requires a color missing at the pivot but not at the other endpoint");
  return vizing_fan(phi, e, x, beta);
}

PartialColoring color_vizing(const Multigraph& g, VizingStats* stats) {
  const int delta = g.max_degree();
  const int r = std::max(1, vizing_bound(delta, g.max_multiplicity()));
  PartialColoring phi(g, r);
  if (delta <= 1) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) phi.assign(e, 0);
    return phi;
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    ShannonChain c = vizing_chain(phi, e, g.min_end(e));
    std::vector<EdgeId> edges = c.edges();
    augment(phi, edges);
    if (stats) {
      stats->fan_length_total += static_cast<std::int64_t>(c.fan.edges.size());
      stats->path_length_total += c.path.length();
      stats->max_chain_length = std::max(stats->max_chain_length, static_cast<int>(edges.size()));
    }
  }
  return phi;
}

}  // namespace shannon

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "shannon/coloring.hpp"
#include "shannon/rng.hpp"

// Reference implementations that work on plain color vectors and never
// touch the occupancy table of PartialColoring.
namespace oracle {

using shannon::Color;
using shannon::EdgeId;
using shannon::kBlank;
using shannon::Multigraph;
using shannon::Vertex;

inline std::vector<Color> shifted(std::vector<Color> colors, std::span<const EdgeId> chain) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) colors[chain[i]] = colors[chain[i + 1]];
  colors[chain.back()] = kBlank;
  return colors;
}

inline bool proper(const Multigraph& g, const std::vector<Color>& colors) {
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    std::set<Color> seen;
    for (EdgeId e : g.incident_edges(x)) {
      if (colors[e] == kBlank) continue;
      if (!seen.insert(colors[e]).second) return false;
    }
  }
  return true;
}

inline std::set<Color> missing(const Multigraph& g, const std::vector<Color>& colors, int r, Vertex x) {
  std::set<Color> m;
  for (Color c = 0; c < r; ++c) m.insert(c);
  for (EdgeId e : g.incident_edges(x)) m.erase(colors[e]);
  return m;
}

inline bool happy(const Multigraph& g, const std::vector<Color>& colors, int r, EdgeId e) {
  if (colors[e] != kBlank) return false;
  auto mx = missing(g, colors, r, g.first(e));
  auto my = missing(g, colors, r, g.second(e));
  return std::any_of(mx.begin(), mx.end(), [&](Color c) { return my.count(c) > 0; });
}

// Component label of every vertex in the subgraph of edges colored a or b.
inline std::vector<int> components(const Multigraph& g, const std::vector<Color>& colors, Color a, Color b) {
  std::vector<int> label(g.num_vertices(), -1);
  int next = 0;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (EdgeId e : g.incident_edges(v)) {
        if (colors[e] != a && colors[e] != b) continue;
        Vertex w = g.other(e, v);
        if (label[w] < 0) {
          label[w] = next;
          q.push(w);
        }
      }
    }
    ++next;
  }
  return label;
}

inline int count_colored(const std::vector<Color>& colors) {
  return static_cast<int>(std::count_if(colors.begin(), colors.end(), [](Color c) { return c != kBlank; }));
}

}  // namespace oracle

namespace support {

using namespace shannon;

inline PartialColoring with_colors(const Multigraph& g, int r, const std::vector<Color>& colors) {
  PartialColoring phi(g, r);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (colors[e] != kBlank) phi.assign(e, colors[e]);
  }
  return phi;
}

inline std::vector<Color> to_vector(const PartialColoring& phi) {
  return {phi.colors().begin(), phi.colors().end()};
}

// Visits edges in random order and gives each a uniformly random valid
// color with probability `fill`; edges without a valid color stay blank.
inline PartialColoring random_partial(const Multigraph& g, int r, Rng& rng, double fill = 1.0) {
  PartialColoring phi(g, r);
  std::vector<EdgeId> order(g.num_edges());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  for (EdgeId e : order) {
    if (rng.uniform01() >= fill) continue;
    std::vector<Color> ok;
    for (Color c = 0; c < r; ++c) {
      if (phi.missing(g.first(e), c) && phi.missing(g.second(e), c)) ok.push_back(c);
    }
    if (!ok.empty()) phi.assign(e, ok[rng.below(ok.size())]);
  }
  return phi;
}

inline std::vector<EdgeId> blank_edges(const PartialColoring& phi) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < phi.graph().num_edges(); ++e) {
    if (!phi.colored(e)) out.push_back(e);
  }
  return out;
}

inline std::vector<EdgeId> unhappy_blank_edges(const PartialColoring& phi) {
  std::vector<EdgeId> out;
  for (EdgeId e : blank_edges(phi)) {
    if (!is_happy(phi, e)) out.push_back(e);
  }
  return out;
}

// Incremental construction of a graph together with a coloring.
struct Builder {
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Color> colors;

  Vertex vertex() { return n++; }
  EdgeId edge(Vertex u, Vertex v, Color c = kBlank) {
    edges.emplace_back(u, v);
    colors.push_back(c);
    return static_cast<EdgeId>(edges.size() - 1);
  }
  // Pendant edge to a fresh vertex.
  EdgeId pendant(Vertex u, Color c) { return edge(u, vertex(), c); }
  // Alternating path from u with colors a, b, a, ...; returns its far end.
  Vertex alternating(Vertex u, Color a, Color b, int length) {
    Vertex cur = u;
    for (int i = 0; i < length; ++i) {
      Vertex next = vertex();
      edge(cur, next, i % 2 == 0 ? a : b);
      cur = next;
    }
    return cur;
  }
  Multigraph graph() const { return Multigraph(n, edges); }
};

// Non-happy blank edge xy (Delta = 4, r = 6) whose first Shannon chain runs
// along a 3/1-alternating path of `length` edges from z, where xz is colored
// 0. The remaining colors at x, y, z attach to path vertices or fresh
// vertices, and `extra` rounds of random chords densify the graph.
struct Backbone {
  Multigraph graph;
  std::vector<Color> colors;
  EdgeId e = kNoEdge;
  Vertex x = kNoVertex;
};

inline Backbone backbone(int length, int extra, Rng& rng) {
  Builder b;
  std::vector<int> deg;
  std::vector<std::set<Color>> used;
  auto vertex = [&] {
    deg.push_back(0);
    used.emplace_back();
    return b.vertex();
  };
  auto can = [&](Vertex u, Color c) { return deg[u] < 4 && !used[u].count(c); };
  auto edge = [&](Vertex u, Vertex v, Color c) {
    ++deg[u];
    ++deg[v];
    if (c != kBlank) {
      used[u].insert(c);
      used[v].insert(c);
    }
    return b.edge(u, v, c);
  };
  Vertex x = vertex(), y = vertex(), z = vertex();
  EdgeId e = edge(x, y, kBlank);
  edge(x, z, 0);
  std::vector<Vertex> path{z};
  for (int i = 0; i < length; ++i) {
    Vertex next = vertex();
    edge(path.back(), next, i % 2 == 0 ? 3 : 1);
    path.push_back(next);
  }
  const std::pair<Vertex, Color> demand[] = {{x, 1}, {x, 2}, {y, 3}, {y, 4}, {y, 5}, {z, 4}, {z, 5}};
  for (auto [u, c] : demand) {
    std::vector<Vertex> cand;
    for (Vertex v : path) {
      if (v != z && can(v, c)) cand.push_back(v);
    }
    Vertex v = cand.empty() || rng.below(4) == 0 ? vertex() : cand[rng.below(cand.size())];
    edge(u, v, c);
  }
  for (int t = 0; t < 5 * extra; ++t) {
    Vertex u = static_cast<Vertex>(rng.below(b.n)), v = static_cast<Vertex>(rng.below(b.n));
    if (u == v || u < 3 || v < 3) continue;
    std::vector<Color> ok;
    for (Color c = 0; c < 6; ++c) {
      if (can(u, c) && can(v, c)) ok.push_back(c);
    }
    if (!ok.empty()) edge(u, v, ok[rng.below(ok.size())]);
  }
  return Backbone{b.graph(), b.colors, e, x};
}

}  // namespace support

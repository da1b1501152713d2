#include "shannon/chain.hpp"

#include <algorithm>
#include <tuple>

namespace shannon {

std::vector<Vertex> path_vertices(const Multigraph& g, const PathChain& p) {
  std::vector<Vertex> xs;
  xs.reserve(p.edges.size() + 1);
  Vertex cur = p.v_start;
  xs.push_back(cur);
  for (EdgeId e : p.edges) {
    cur = g.other(e, cur);
    xs.push_back(cur);
  }
  return xs;
}

PathChain truncate(const Multigraph& g, const PathChain& p, int j) {
  if (j < 1 || j > p.length()) throw PreconditionError("truncation length out of range");
  PathChain q;
  q.edges.assign(p.edges.begin(), p.edges.begin() + j);
  q.v_start = p.v_start;
  Vertex cur = p.v_start;
  for (EdgeId e : q.edges) cur = g.other(e, cur);
  q.v_end = cur;
  return q;
}

std::vector<Vertex> interior_vertices(const Multigraph& g, const PathChain& p) {
  std::vector<Vertex> xs = path_vertices(g, p);
  std::vector<Vertex> out;
  auto [s0, s1] = g.endpoints(p.start());
  auto [t0, t1] = g.endpoints(p.end());
  for (Vertex v : xs) {
    if (v != s0 && v != s1 && v != t0 && v != t1) out.push_back(v);
  }
  return out;
}

bool is_chain(const Multigraph& g, std::span<const EdgeId> chain) {
  if (chain.empty()) return false;
  for (EdgeId e : chain) {
    if (e < 0 || e >= g.num_edges()) return false;
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    auto [a, b] = g.endpoints(chain[i]);
    int shared = g.incident(chain[i + 1], a) + g.incident(chain[i + 1], b);
    if (shared != 1) return false;
  }
  std::vector<EdgeId> sorted(chain.begin(), chain.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool is_shiftable(const PartialColoring& phi, std::span<const EdgeId> chain) {
  const Multigraph& g = phi.graph();
  if (!is_chain(g, chain) || phi.colored(chain[0])) return false;
  std::vector<EdgeId> members(chain.begin(), chain.end());
  std::sort(members.begin(), members.end());
  // (vertex, new color) slots claimed by chain edges after the shift.
  std::vector<std::pair<Vertex, Color>> slots;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    Color c = phi.color(chain[i + 1]);
    if (c == kBlank) continue;
    auto [u, v] = g.endpoints(chain[i]);
    for (Vertex w : {u, v}) {
      EdgeId holder = phi.edge_at(w, c);
      if (holder != kNoEdge && !std::binary_search(members.begin(), members.end(), holder)) return false;
      slots.emplace_back(w, c);
    }
  }
  std::sort(slots.begin(), slots.end());
  return std::adjacent_find(slots.begin(), slots.end()) == slots.end();
}

void shift(PartialColoring& phi, std::span<const EdgeId> chain) {
  const Multigraph& g = phi.graph();
  if (!is_chain(g, chain)) throw ColoringError("not a chain");
  if (phi.colored(chain[0])) throw ColoringError("first edge of a shifted chain must be blank");
  const std::size_t k = chain.size();
  std::vector<Color> old(k);
  for (std::size_t i = 0; i < k; ++i) old[i] = phi.color(chain[i]);
  for (std::size_t i = 1; i < k; ++i) {
    if (old[i] != kBlank) phi.unassign(chain[i]);
  }
  std::size_t done = 0;
  try {
    for (; done + 1 < k; ++done) {
      if (old[done + 1] != kBlank) phi.assign(chain[done], old[done + 1]);
    }
  } catch (const ColoringError&) {
    for (std::size_t i = 0; i < done; ++i) {
      if (old[i + 1] != kBlank) phi.unassign(chain[i]);
    }
    for (std::size_t i = 1; i < k; ++i) {
      if (old[i] != kBlank) phi.assign(chain[i], old[i]);
    }
    throw ColoringError("shift would produce an improper coloring");
  }
}

void unshift(PartialColoring& phi, std::span<const EdgeId> chain) {
  std::vector<EdgeId> rev(chain.rbegin(), chain.rend());
  shift(phi, rev);
}

bool is_happy_chain(PartialColoring& phi, std::span<const EdgeId> chain) {
  if (!is_shiftable(phi, chain)) return false;
  ScopedShift guard(phi, chain);
  return is_happy(phi, chain.back()).has_value();
}

Color augment(PartialColoring& phi, std::span<const EdgeId> chain, std::initializer_list<Color> prefer) {
  shift(phi, chain);
  EdgeId last = chain.back();
  auto [u, v] = phi.graph().endpoints(last);
  Color pick = kBlank;
  for (Color c : prefer) {
    if (c >= 0 && c < phi.num_colors() && phi.missing(u, c) && phi.missing(v, c)) {
      pick = c;
      break;
    }
  }
  if (pick == kBlank) pick = phi.min_common_missing(u, v);
  if (pick == kBlank) {
    unshift(phi, chain);
    throw ColoringError("chain is not happy");
  }
  phi.assign(last, pick);
  return pick;
}

void unaugment(PartialColoring& phi, std::span<const EdgeId> chain) {
  phi.unassign(chain.back());
  unshift(phi, chain);
}

PathChain bicolored_path(const PartialColoring& phi, EdgeId e, Vertex v_start, Color a, Color b, int cap) {
  const Multigraph& g = phi.graph();
  if (phi.colored(e)) throw PreconditionError("path chain must start at an uncolored edge");
  if (!g.incident(e, v_start)) throw PreconditionError("v_start is not an endpoint of the start edge");
  if (cap < 1) throw PreconditionError("cap must be positive");
  PathChain p;
  p.edges.push_back(e);
  p.v_start = v_start;
  const Vertex far = g.other(e, v_start);
  Vertex cur = far;
  Color want = a;
  while (p.length() < cap) {
    EdgeId f = phi.edge_at(cur, want);
    if (f == kNoEdge) break;
    Vertex next = g.other(f, cur);
    if (next == far) throw PreconditionError("bicolored walk closes a cycle through the start edge");
    if (p.length() == 1 && next == v_start) throw PreconditionError("bicolored walk returns along a parallel edge");
    p.edges.push_back(f);
    cur = next;
    want = want == a ? b : a;
  }
  p.v_end = cur;
  return p;
}

namespace {

// Walks the ab-component from `start` leaving along `first`. Returns true if
// `target` is reached.
bool walk_reaches(const PartialColoring& phi, Vertex start, Vertex target, Color first, Color second) {
  const Multigraph& g = phi.graph();
  Vertex cur = start;
  Color want = first;
  while (true) {
    EdgeId f = phi.edge_at(cur, want);
    if (f == kNoEdge) return false;
    cur = g.other(f, cur);
    if (cur == target) return true;
    if (cur == start) return false;
    if (first == second) return false;
    want = want == first ? second : first;
  }
}

}  // namespace

bool related(const PartialColoring& phi, Vertex x, Vertex y, Color a, Color b) {
  if (x == y) return true;
  if (walk_reaches(phi, x, y, a, b)) return true;
  return a != b && walk_reaches(phi, x, y, b, a);
}

bool edge_hopeful(const PartialColoring& phi, EdgeId e, Color a, Color b) {
  if (phi.colored(e)) return false;
  auto [x, y] = phi.graph().endpoints(e);
  return phi.degree_in(x, a, b) < 2 && phi.degree_in(y, a, b) < 2;
}

bool edge_successful(const PartialColoring& phi, EdgeId e, Color a, Color b) {
  if (!edge_hopeful(phi, e, a, b)) return false;
  auto [x, y] = phi.graph().endpoints(e);
  return !related(phi, x, y, a, b);
}

bool fan_hopeful(PartialColoring& phi, const Fan& fan, Color a, Color b) {
  const Multigraph& g = phi.graph();
  for (EdgeId e : fan.edges) {
    if (!g.incident(e, fan.pivot)) return false;
  }
  if (!is_shiftable(phi, fan.edges) || is_happy_chain(phi, fan.edges)) return false;
  return phi.degree_in(fan.pivot, a, b) < 2 && phi.degree_in(fan.v_end(g), a, b) < 2;
}

bool fan_successful(PartialColoring& phi, const Fan& fan, Color a, Color b) {
  if (!fan_hopeful(phi, fan, a, b)) return false;
  Vertex y = fan.v_end(phi.graph());
  ScopedShift guard(phi, fan.edges);
  return !related(phi, fan.pivot, y, a, b);
}

}  // namespace shannon

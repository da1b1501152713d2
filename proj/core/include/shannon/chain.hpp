#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "shannon/coloring.hpp"

namespace shannon {

// A fan around `pivot`: every edge contains the pivot.
struct Fan {
  std::vector<EdgeId> edges;
  Vertex pivot = kNoVertex;

  EdgeId start() const { return edges.front(); }
  EdgeId end() const { return edges.back(); }
  Vertex v_start(const Multigraph& g) const { return g.other(edges.front(), pivot); }
  Vertex v_end(const Multigraph& g) const { return g.other(edges.back(), pivot); }
};

// A path chain: v_start lies on the first edge, the remaining edges form a
// simple path ending at v_end.
struct PathChain {
  std::vector<EdgeId> edges;
  Vertex v_start = kNoVertex;
  Vertex v_end = kNoVertex;

  int length() const { return static_cast<int>(edges.size()); }
  EdgeId start() const { return edges.front(); }
  EdgeId end() const { return edges.back(); }
};

// x_0 = v_start, x_1, ..., x_k = v_end.
std::vector<Vertex> path_vertices(const Multigraph& g, const PathChain& p);
// First j edges of p.
PathChain truncate(const Multigraph& g, const PathChain& p, int j);
// Vertices of p not incident to its first or last edge.
std::vector<Vertex> interior_vertices(const Multigraph& g, const PathChain& p);

// Distinct edges, consecutive edges sharing at least one vertex.
bool is_chain(const Multigraph& g, std::span<const EdgeId> chain);

// First edge blank and the shifted coloring proper.
bool is_shiftable(const PartialColoring& phi, std::span<const EdgeId> chain);

// Shift: e_i takes the color of e_{i+1}, the last edge becomes blank.
// Throws ColoringError and leaves phi unchanged if the chain is not
// phi-shiftable.
void shift(PartialColoring& phi, std::span<const EdgeId> chain);
// Shift along the reversed chain, undoing shift(phi, chain).
void unshift(PartialColoring& phi, std::span<const EdgeId> chain);

// Shiftable and the last edge is happy afterwards. phi is restored.
bool is_happy_chain(PartialColoring& phi, std::span<const EdgeId> chain);

// Shifts the chain and colors its last edge. Colors in `prefer` are tried
// first, then the smallest common missing color. Returns the color used.
// Throws ColoringError (phi unchanged) if the chain is not phi-happy.
Color augment(PartialColoring& phi, std::span<const EdgeId> chain, std::initializer_list<Color> prefer = {});
// Undoes augment(phi, chain, ...).
void unaugment(PartialColoring& phi, std::span<const EdgeId> chain);

// P(e; phi, ab): the uncolored edge e followed by the maximal path of edges
// colored a, b, a, ... leaving the endpoint of e opposite v_start. At most
// `cap` edges are returned. Throws PreconditionError if e is colored or the
// walk would close a cycle through e.
PathChain bicolored_path(const PartialColoring& phi, EdgeId e, Vertex v_start, Color a, Color b,
                         int cap);

// x and y lie in the same component of the subgraph colored a or b.
bool related(const PartialColoring& phi, Vertex x, Vertex y, Color a, Color b);

// Uncolored e with deg(x; ab) < 2 and deg(y; ab) < 2.
bool edge_hopeful(const PartialColoring& phi, EdgeId e, Color a, Color b);
// Hopeful and the endpoints are not ab-related.
bool edge_successful(const PartialColoring& phi, EdgeId e, Color a, Color b);

// Fan shiftable, not happy, and the pivot and v_end have ab-degree < 2.
bool fan_hopeful(PartialColoring& phi, const Fan& fan, Color a, Color b);
// Hopeful and pivot, v_end not ab-related after shifting the fan.
bool fan_successful(PartialColoring& phi, const Fan& fan, Color a, Color b);

// Shifts a chain for the lifetime of the guard.
class ScopedShift {
 public:
  ScopedShift(PartialColoring& phi, std::span<const EdgeId> chain) : phi_(phi), chain_(chain) {
    shift(phi_, chain_);
  }
  ~ScopedShift() { unshift(phi_, chain_); }
  ScopedShift(const ScopedShift&) = delete;
  ScopedShift& operator=(const ScopedShift&) = delete;

 private:
  PartialColoring& phi_;
  std::span<const EdgeId> chain_;
};

}  // namespace shannon

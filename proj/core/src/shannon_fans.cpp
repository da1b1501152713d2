#include "shannon/shannon_fans.hpp"

#include <string>

namespace shannon {

namespace {

void check_start(const PartialColoring& phi, EdgeId e, Vertex x) {
  if (e < 0 || e >= phi.graph().num_edges()) throw PreconditionError("edge id out of range");
  if (phi.colored(e)) throw PreconditionError("fan must start at an uncolored edge");
  if (!phi.graph().incident(e, x)) throw PreconditionError("pivot is not an endpoint of the edge");
}

FanChoice single(EdgeId e, Vertex x, Color c) { return FanChoice{Fan{{e}, x}, c, c}; }

FanChoice pair(EdgeId e, EdgeId f, Vertex x, Color a, Color b) { return FanChoice{Fan{{e, f}, x}, a, b}; }

EdgeId edge_at_pivot(const PartialColoring& phi, Vertex x, Color eta) {
  EdgeId f = phi.edge_at(x, eta);
  if (f == kNoEdge) {
    throw InvariantError("pivot " + std::to_string(x) + " misses color " + std::to_string(eta) +
                         " although no common missing color exists");
  }
  return f;
}

}  // namespace

FanChoice first_shannon_fan(const PartialColoring& phi, EdgeId e, Vertex x) {
  check_start(phi, e, x);
  const Multigraph& g = phi.graph();
  Vertex y = g.other(e, x);
  if (Color b = phi.min_common_missing(x, y); b != kBlank) return single(e, x, b);
  Color eta = phi.min_missing(y);
  if (eta == kBlank) throw InvariantError("vertex " + std::to_string(y) + " has no missing color");
  EdgeId f = edge_at_pivot(phi, x, eta);
  Vertex z = g.other(f, x);
  if (Color b = phi.min_common_missing(x, z); b != kBlank) return pair(e, f, x, b, b);
  Color b = phi.min_common_missing(y, z);
  if (b == kBlank) {
    throw InvariantError("no color missing at both " + std::to_string(y) + " and " + std::to_string(z));
  }
  Color a = phi.min_missing(x);
  if (a == kBlank) throw InvariantError("pivot " + std::to_string(x) + " has no missing color");
  return pair(e, f, x, a, b);
}

FanChoice next_shannon_fan(const PartialColoring& phi, EdgeId e, Vertex x, Color alpha, Color beta) {
  check_start(phi, e, x);
  const Multigraph& g = phi.graph();
  Vertex y = g.other(e, x);
  const int r = phi.num_colors();
  if (alpha < 0 || alpha >= r || beta < 0 || beta >= r || alpha == beta) {
    throw PreconditionError("alpha and beta must be distinct palette colors");
  }
  if (!phi.missing(x, alpha) || phi.missing(y, alpha) || !phi.missing(y, beta)) {
    throw PreconditionError("requires alpha in M(x) \\ M(y) and beta in M(y)");
  }
  if (Color d = phi.min_common_missing(x, y); d != kBlank) return single(e, x, d);
  Color eta = phi.min_missing_except(y, beta);
  if (eta == kBlank) throw InvariantError("vertex " + std::to_string(y) + " misses only one color");
  EdgeId f = edge_at_pivot(phi, x, eta);
  Vertex z = g.other(f, x);
  if (Color d = phi.min_common_missing(x, z); d != kBlank) return pair(e, f, x, d, d);
  Color d = phi.min_common_missing(y, z);
  if (d == kBlank) {
    throw InvariantError("no color missing at both " + std::to_string(y) + " and " + std::to_string(z));
  }
  if (d == beta) return pair(e, f, x, alpha, beta);
  Color c = phi.min_missing_except(x, alpha);
  if (c == kBlank) throw InvariantError("pivot " + std::to_string(x) + " misses only one color");
  return pair(e, f, x, c, d);
}

}  // namespace shannon

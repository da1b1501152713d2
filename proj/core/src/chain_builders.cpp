#include "shannon/chain_builders.hpp"

#include "shannon/vizing.hpp"

namespace shannon {

std::vector<EdgeId> ShannonChain::edges() const {
  std::vector<EdgeId> out(fan.edges);
  out.insert(out.end(), path.edges.begin() + 1, path.edges.end());
  return out;
}

namespace {

ShannonChain happy(Fan fan, const Multigraph& g, Color c) {
  PathChain p;
  p.edges.push_back(fan.end());
  p.v_start = fan.pivot;
  p.v_end = fan.v_end(g);
  return ShannonChain{std::move(fan), std::move(p), c, c};
}

// P(End(F); Shift(phi, F), ab) read up to `cap` edges.
PathChain path_after_fan(PartialColoring& phi, const Fan& fan, Color a, Color b, int cap) {
  ScopedShift guard(phi, fan.edges);
  return bicolored_path(phi, fan.end(), fan.pivot, a, b, cap);
}

// Shared tail of the first and next chain algorithms: P after F, or (e)
// with P' when P returns to the pivot within 2*ell edges.
ShannonChain fan_or_edge(PartialColoring& phi, Fan fan, Color a, Color b, int ell) {
  const Multigraph& g = phi.graph();
  PathChain p = path_after_fan(phi, fan, a, b, 2 * ell + 1);
  if (p.length() > 2 * ell) return ShannonChain{std::move(fan), truncate(g, p, 2 * ell), a, b};
  if (p.v_end != fan.pivot) return ShannonChain{std::move(fan), std::move(p), a, b};
  EdgeId e = fan.start();
  Fan single{{e}, fan.pivot};
  PathChain q = bicolored_path(phi, e, fan.pivot, a, b, 2 * ell);
  return ShannonChain{std::move(single), std::move(q), a, b};
}

void check_ell(int ell) {
  if (ell < 3) throw PreconditionError("ell must be at least 3");
}

}  // namespace

ShannonChain shannon_chain(PartialColoring& phi, EdgeId e, Vertex x) {
  const Multigraph& g = phi.graph();
  FanChoice f = first_shannon_fan(phi, e, x);
  if (phi.missing(x, f.second)) return happy(std::move(f.fan), g, f.second);
  const int unbounded = g.num_edges() + 1;
  PathChain p = path_after_fan(phi, f.fan, f.first, f.second, unbounded);
  if (p.v_end != x) return ShannonChain{std::move(f.fan), std::move(p), f.first, f.second};
  Fan single{{e}, x};
  PathChain q = bicolored_path(phi, e, x, f.first, f.second, unbounded);
  return ShannonChain{std::move(single), std::move(q), f.first, f.second};
}

ShannonChain first_chain(PartialColoring& phi, EdgeId e, Vertex x, int ell) {
  check_ell(ell);
  FanChoice f = first_shannon_fan(phi, e, x);
  if (phi.missing(x, f.second)) return happy(std::move(f.fan), phi.graph(), f.second);
  return fan_or_edge(phi, std::move(f.fan), f.first, f.second, ell);
}

ShannonChain next_chain(PartialColoring& phi, EdgeId e, Vertex x, Color alpha, Color beta, int ell) {
  check_ell(ell);
  FanChoice f = next_shannon_fan(phi, e, x, alpha, beta);
  if (phi.missing(x, f.second)) return happy(std::move(f.fan), phi.graph(), f.second);
  if (f.second == beta) {
    PathChain p = path_after_fan(phi, f.fan, alpha, beta, 2 * ell);
    return ShannonChain{std::move(f.fan), std::move(p), alpha, beta};
  }
  return fan_or_edge(phi, std::move(f.fan), f.first, f.second, ell);
}

ShannonChain vizing_chain(PartialColoring& phi, EdgeId e, Vertex x) {
  const Multigraph& g = phi.graph();
  VizingFanResult v = first_vizing_fan(phi, e, x);
  const Color beta = v.color;
  if (phi.missing(x, beta)) return happy(std::move(v.fan), g, beta);
  const Color alpha = phi.min_missing(x);
  if (alpha == kBlank) throw InvariantError("pivot has no missing color");
  const int unbounded = g.num_edges() + 1;
  Fan prefix{{v.fan.edges.begin(), v.fan.edges.begin() + v.j}, x};
  // A fan can be happy through a color the search never reached.
  for (Fan* f : {&v.fan, &prefix}) {
    ScopedShift guard(phi, f->edges);
    if (auto c = is_happy(phi, f->end())) {
      Fan out = *f;
      return happy(std::move(out), g, *c);
    }
  }
  if (fan_successful(phi, v.fan, alpha, beta)) {
    PathChain p = path_after_fan(phi, v.fan, alpha, beta, unbounded);
    return ShannonChain{std::move(v.fan), std::move(p), alpha, beta};
  }
  if (!fan_successful(phi, prefix, alpha, beta)) {
    throw InvariantError("neither the Vizing fan nor its prefix is successful");
  }
  PathChain p = path_after_fan(phi, prefix, alpha, beta, unbounded);
  return ShannonChain{std::move(prefix), std::move(p), alpha, beta};
}

}  // namespace shannon

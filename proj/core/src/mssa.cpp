#include "shannon/mssa.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <unordered_set>

namespace shannon {

std::vector<EdgeId> MultiStepChain::edges() const {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const ChainStep& s = steps[i];
    out.insert(out.end(), s.fan.edges.begin() + (i == 0 ? 0 : 1), s.fan.edges.end());
    out.insert(out.end(), s.path.edges.begin() + 1, s.path.edges.end());
  }
  return out;
}

std::vector<Vertex> MultiStepChain::vertices(const Multigraph& g) const {
  std::vector<Vertex> out;
  for (EdgeId e : edges()) {
    out.push_back(g.first(e));
    out.push_back(g.second(e));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::vector<EdgeId> step_edges(const ChainStep& s) {
  std::vector<EdgeId> out(s.fan.edges);
  out.insert(out.end(), s.path.edges.begin() + 1, s.path.edges.end());
  return out;
}

ChainStep to_step(ShannonChain c) {
  ChainStep s{std::move(c.fan), std::move(c.path), {}, c.alpha, c.beta};
  s.full_path = s.path;
  return s;
}

// Owner tables for vertices and edges, reused across calls. An entry is
// live only if its stamp equals the current epoch.
class OwnerTable {
 public:
  void begin(std::size_t size) {
    if (stamp_.size() < size) {
      stamp_.resize(size, 0);
      owner_.resize(size, -1);
    }
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  }
  int get(std::int32_t i) const { return stamp_[i] == epoch_ ? owner_[i] : -1; }
  void set(std::int32_t i, int owner) {
    stamp_[i] = epoch_;
    owner_[i] = owner;
  }
  void clear(std::int32_t i) { stamp_[i] = 0; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::vector<int> owner_;
  std::uint32_t epoch_ = 0;
};

struct Scratch {
  OwnerTable vertex;
  OwnerTable edge;
};

Scratch& scratch() {
  thread_local Scratch s;
  return s;
}

void mark(const Multigraph& g, Scratch& s, const ChainStep& step, int owner) {
  s.vertex.set(step.fan.pivot, owner);
  for (EdgeId f : step.fan.edges) s.vertex.set(g.other(f, step.fan.pivot), owner);
  for (int i = 1; i + 1 < step.path.length(); ++i) s.edge.set(step.path.edges[i], owner);
}

void unmark(const Multigraph& g, Scratch& s, const ChainStep& step) {
  s.vertex.clear(step.fan.pivot);
  for (EdgeId f : step.fan.edges) s.vertex.clear(g.other(f, step.fan.pivot));
  for (int i = 1; i + 1 < step.path.length(); ++i) s.edge.clear(step.path.edges[i]);
}

// Scans F + P in chain order (near endpoint, far endpoint, then the edge)
// and reports the first element owned by an earlier step.
std::optional<Intersection> first_hit(const Multigraph& g, const Scratch& s, const ShannonChain& c) {
  auto probe = [&](Vertex near, Vertex far, EdgeId e) -> std::optional<Intersection> {
    for (Vertex v : {near, far}) {
      if (int j = s.vertex.get(v); j >= 0) return Intersection{0, 0, j, true, v};
    }
    if (int j = s.edge.get(e); j >= 0) return Intersection{0, 0, j, false, e};
    return std::nullopt;
  };
  const Vertex pivot = c.fan.pivot;
  for (std::size_t i = 0; i < c.fan.edges.size(); ++i) {
    EdgeId e = c.fan.edges[i];
    Vertex y = g.other(e, pivot);
    auto hit = i == 0 ? probe(y, pivot, e) : probe(pivot, y, e);
    if (hit) return hit;
  }
  Vertex cur = c.path.v_start;
  cur = g.other(c.path.edges[0], cur);
  for (int i = 1; i < c.path.length(); ++i) {
    EdgeId e = c.path.edges[i];
    Vertex next = g.other(e, cur);
    if (auto hit = probe(cur, next, e)) return hit;
    cur = next;
  }
  return std::nullopt;
}

std::string describe(const Multigraph& g, EdgeId e, Vertex x, const std::vector<ChainStep>& steps,
                     const ShannonChain& next) {
  std::ostringstream out;
  out << "MSSA failure branch reached: edge " << e << " pivot " << x << ", k = " << steps.size();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    out << "\n  step " << i << ": pivot " << steps[i].fan.pivot << " fan";
    for (EdgeId f : steps[i].fan.edges) out << ' ' << f;
    out << " path";
    for (EdgeId f : steps[i].path.edges) out << ' ' << f;
    out << " colors " << steps[i].first << '/' << steps[i].second;
  }
  out << "\n  next: pivot " << next.fan.pivot << " fan";
  for (EdgeId f : next.fan.edges) out << ' ' << f;
  out << " path";
  for (EdgeId f : next.path.edges) out << ' ' << f;
  out << " vEnd " << next.path.v_end << " (" << g.num_edges() << " edges in graph)";
  return out.str();
}

// Shannon-chain structure of one step against psi, which must be the
// coloring shifted by all earlier steps. Returns an error or "".
std::string check_step(PartialColoring& psi, const ChainStep& s, int index, bool last, int ell) {
  const Multigraph& g = psi.graph();
  std::ostringstream err;
  const std::string where = "step " + std::to_string(index) + ": ";
  if (s.fan.edges.empty() || s.fan.edges.size() > 2) return where + "fan length must be 1 or 2";
  for (EdgeId f : s.fan.edges) {
    if (!g.incident(f, s.fan.pivot)) return where + "fan edge misses the pivot";
  }
  if (s.path.edges.empty() || s.path.start() != s.fan.end()) return where + "path does not start at End(F)";
  if (s.path.v_start != s.fan.pivot) return where + "vStart(P) differs from Pivot(F)";
  if (!is_shiftable(psi, s.fan.edges)) return where + "fan not shiftable";
  const bool happy = is_happy_chain(psi, s.fan.edges);
  if (!happy && !fan_hopeful(psi, s.fan, s.first, s.second)) return where + "fan neither happy nor hopeful";
  if (happy && s.path.length() != 1) return where + "happy fan followed by a path";
  if (!last && s.path.length() < ell) return where + "committed path shorter than ell";
  if (s.path.length() > 2 * ell) return where + "path longer than 2*ell";
  {
    ScopedShift guard(psi, s.fan.edges);
    std::vector<Vertex> xs = path_vertices(g, s.path);
    if (xs.back() != s.path.v_end) return where + "vEnd(P) does not match the walk";
    std::vector<Vertex> tail(xs.begin() + 1, xs.end());
    std::sort(tail.begin(), tail.end());
    if (std::adjacent_find(tail.begin(), tail.end()) != tail.end()) return where + "path revisits a vertex";
    for (int i = 1; i < s.path.length(); ++i) {
      Color want = i % 2 == 1 ? s.first : s.second;
      if (psi.color(s.path.edges[i]) != want) return where + "path colors do not alternate";
    }
    if (s.path.length() > 1 && !psi.missing(s.fan.v_end(g), s.second)) {
      return where + "second color present at vEnd(F) after the fan shift";
    }
  }
  return "";
}

std::string validate_steps(const PartialColoring& phi, const std::vector<ChainStep>& steps, int ell, bool require_happy) {
  const Multigraph& g = phi.graph();
  if (steps.empty()) return "empty chain";
  if (phi.colored(steps[0].fan.start())) return "Start(C) is colored";
  for (std::size_t i = 1; i < steps.size(); ++i) {
    const ChainStep& prev = steps[i - 1];
    if (steps[i].fan.start() != prev.path.end()) return "step " + std::to_string(i) + ": Start(F) != End(P) of previous step";
    if (steps[i].fan.v_start(g) != prev.path.v_end) {
      return "step " + std::to_string(i) + ": vStart(F) != vEnd(P) of previous step";
    }
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    std::unordered_set<Vertex> fan_v{steps[i].fan.pivot};
    for (EdgeId f : steps[i].fan.edges) fan_v.insert(g.other(f, steps[i].fan.pivot));
    std::unordered_set<EdgeId> interior;
    for (int t = 1; t + 1 < steps[i].path.length(); ++t) interior.insert(steps[i].path.edges[t]);
    for (std::size_t j = i + 1; j < steps.size(); ++j) {
      for (EdgeId f : step_edges(steps[j])) {
        if (interior.count(f)) {
          return "non-intersection violated: edge " + std::to_string(f) + " of step " + std::to_string(j) +
                 " is interior to path " + std::to_string(i);
        }
        if (fan_v.count(g.first(f)) || fan_v.count(g.second(f))) {
          return "non-intersection violated: step " + std::to_string(j) + " touches fan vertices of step " +
                 std::to_string(i);
        }
      }
    }
  }
  PartialColoring psi = phi;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    std::string err = check_step(psi, steps[i], static_cast<int>(i), i + 1 == steps.size(), ell);
    if (!err.empty()) return err;
    try {
      shift(psi, step_edges(steps[i]));
    } catch (const ColoringError&) {
      return "step " + std::to_string(i) + ": not shiftable";
    }
  }
  if (require_happy) {
    EdgeId last = steps.back().path.end();
    if (!is_happy(psi, last)) return "End(C) is not happy after shifting the whole chain";
  }
  return "";
}

void check_state(const PartialColoring& original, const PartialColoring& psi, const Scratch& s,
                 const std::vector<ChainStep>& steps, const ChainStep& cur, int ell) {
  const Multigraph& g = psi.graph();
  auto fail = [](const std::string& what) { throw InvariantError("MSSA invariant: " + what); };
  if (!is_proper(g, psi.colors())) fail("working coloring is improper");
  PartialColoring expect = original;
  for (const ChainStep& st : steps) shift(expect, step_edges(st));
  if (!(expect == psi)) fail("working coloring differs from Shift(phi, C)");
  std::vector<int> vo(g.num_vertices(), -1), eo(g.num_edges(), -1);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    vo[steps[i].fan.pivot] = static_cast<int>(i);
    for (EdgeId f : steps[i].fan.edges) vo[g.other(f, steps[i].fan.pivot)] = static_cast<int>(i);
    for (int t = 1; t + 1 < steps[i].path.length(); ++t) eo[steps[i].path.edges[t]] = static_cast<int>(i);
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (s.vertex.get(v) != vo[v]) fail("vertex visited map disagrees with the step stack");
  }
  for (EdgeId f = 0; f < g.num_edges(); ++f) {
    if (s.edge.get(f) != eo[f]) fail("edge visited map disagrees with the step stack");
  }
  if (!steps.empty()) {
    if (cur.fan.start() != steps.back().path.end()) fail("Inv1: Start(F) != End(C)");
    if (cur.fan.v_start(g) != steps.back().path.v_end) fail("Inv1: vStart(F) != vEnd(C)");
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const ChainStep& st = steps[i];
    if (original.degree_in(st.fan.v_end(g), st.first, st.second) != 1) {
      fail("Chain1: vEnd(F_" + std::to_string(i) + ") does not have degree 1 in the original coloring");
    }
    for (int t = 1; t < st.path.length(); ++t) {
      Color c = original.color(st.path.edges[t]);
      if (c != st.first && c != st.second) fail("Chain2: path " + std::to_string(i) + " leaves its color pair");
    }
  }
  std::vector<ChainStep> all(steps);
  all.push_back(cur);
  std::string err = validate_steps(original, all, ell, false);
  if (!err.empty()) fail("Inv2/Inv3: " + err);
  PartialColoring work = psi;
  const bool happy = is_happy_chain(work, cur.fan.edges);
  if (!happy && !fan_successful(work, cur.fan, cur.first, cur.second) && cur.path.length() != 2 * ell) {
    fail("Inv3: disappointed fan with a short path");
  }
}

}  // namespace

std::string validate_multistep_chain(const PartialColoring& phi, const MultiStepChain& chain, int ell) {
  return validate_steps(phi, chain.steps, ell, true);
}

MssaResult mssa(PartialColoring& phi, EdgeId e, Vertex x, const MssaParams& params, Rng& rng) {
  const Multigraph& g = phi.graph();
  const int ell = params.ell;
  if (ell < 3) throw PreconditionError("ell must be at least 3");
  if (e < 0 || e >= g.num_edges() || phi.colored(e)) throw PreconditionError("MSSA needs an uncolored edge");
  if (!g.incident(e, x)) throw PreconditionError("pivot is not an endpoint of the edge");

  Scratch& s = scratch();
  s.vertex.begin(g.num_vertices());
  s.edge.begin(g.num_edges());
  std::optional<PartialColoring> original;
  if (params.debug_invariants) original.emplace(phi);

  MssaResult res;
  ExecutionRecord& rec = res.record;
  rec.edge = e;
  rec.pivot = x;
  std::vector<ChainStep> steps;
  ChainStep cur = to_step(first_chain(phi, e, x, ell));

  auto restore = [&] {
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) unshift(phi, step_edges(*it));
  };

  while (true) {
    ++rec.iterations;
    if (cur.path.length() < 2 * ell) {
      rec.outcome = MssaOutcome::kSuccess;
      rec.terminus_edge = cur.path.end();
      rec.terminus_vertex = cur.path.v_end;
      restore();
      steps.push_back(std::move(cur));
      res.chain = MultiStepChain{std::move(steps)};
      rec.chain_length = static_cast<int>(res.chain->edges().size());
      return res;
    }
    if (params.max_iters > 0 && rec.iterations >= params.max_iters) {
      rec.outcome = MssaOutcome::kBudgetExhausted;
      if (steps.empty()) {
        rec.terminus_edge = e;
        rec.terminus_vertex = g.other(e, x);
      } else {
        rec.terminus_edge = steps.back().path.end();
        rec.terminus_vertex = steps.back().path.v_end;
      }
      restore();
      return res;
    }

    const int k = static_cast<int>(steps.size());
    const int cut = static_cast<int>(rng.between(ell, 2 * ell - 1));
    ChainStep step{cur.fan, truncate(g, cur.path, cut), cur.path, cur.first, cur.second};
    const Color b = phi.color(step.path.end());
    if (b != step.first && b != step.second) {
      restore();
      throw InvariantError("End(P_k) is not colored with the path colors");
    }
    const Color a = b == step.first ? step.second : step.first;
    shift(phi, step_edges(step));
    mark(g, s, step, k);
    const EdgeId e2 = step.path.end();
    const Vertex w = step.path.v_end;
    const Vertex u = g.other(e2, w);
    steps.push_back(std::move(step));

    ShannonChain next;
    try {
      next = next_chain(phi, e2, u, a, b, ell);
    } catch (const PreconditionError& ex) {
      restore();
      throw InvariantError(std::string("next chain precondition failed: ") + ex.what());
    }

    if (auto hit = first_hit(g, s, next)) {
      const int j = hit->j;
      for (int i = k; i >= j; --i) {
        unshift(phi, step_edges(steps[i]));
        unmark(g, s, steps[i]);
      }
      const ChainStep& back = steps[j];
      cur = ChainStep{back.fan, back.full_path, back.full_path, back.first, back.second};
      steps.resize(j);
      hit->iteration = rec.iterations;
      hit->k = k;
      rec.backtracks.push_back(*hit);
      rec.d.push_back(-(k - j));
    } else if (next.path.length() >= 2 && next.path.length() < 2 * ell && next.path.v_end == next.fan.pivot) {
      std::string msg = describe(g, e, x, steps, next);
      restore();
      throw InvariantError(msg);
    } else {
      cur = to_step(std::move(next));
      rec.d.push_back(1);
    }
    if (params.debug_invariants) check_state(*original, phi, s, steps, cur, ell);
  }
}

SequentialResult color_sequential_random(const Multigraph& g, const SequentialParams& params) {
  const int delta = g.max_degree();
  SequentialResult out{PartialColoring(g, std::max(1, shannon_bound(delta))), 0, {}, 0, 0, {}};
  PartialColoring& phi = out.coloring;
  if (delta <= 1) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) phi.assign(e, 0);
    return out;
  }
  MssaParams mp;
  mp.ell = params.ell > 0 ? params.ell : default_ell(delta);
  mp.debug_invariants = params.debug_invariants;
  std::vector<EdgeId> todo(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) todo[e] = e;
  Rng pick = Rng::stream(params.seed, 0);
  std::uint64_t attempt = 0;
  while (!todo.empty()) {
    std::size_t i = pick.below(todo.size());
    EdgeId e = todo[i];
    Vertex x = pick.below(2) == 0 ? g.first(e) : g.second(e);
    Rng run = Rng::stream(params.seed, ++attempt, static_cast<std::uint64_t>(e));
    MssaResult r = mssa(phi, e, x, mp, run);
    std::vector<EdgeId> edges = r.chain->edges();
    augment(phi, edges);
    out.total_iterations += r.record.iterations;
    out.per_edge_iterations.push_back(r.record.iterations);
    out.total_chain_length += static_cast<std::int64_t>(edges.size());
    out.max_chain_length = std::max(out.max_chain_length, static_cast<int>(edges.size()));
    if (params.keep_records) out.records.push_back(std::move(r.record));
    todo[i] = todo.back();
    todo.pop_back();
  }
  return out;
}

}  // namespace shannon

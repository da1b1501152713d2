#include "shannon/verify.hpp"

#include <algorithm>
#include <utility>

namespace shannon {

VerificationReport verify(const Multigraph& g, std::span<const Color> colors, int bound) {
  VerificationReport rep;
  rep.bound = bound;
  rep.colors_used = colors_used(colors);
  for (Color c : colors) {
    if (c == kBlank) ++rep.uncolored;
    rep.max_color = std::max(rep.max_color, c);
  }
  std::vector<std::pair<Color, EdgeId>> at;
  std::vector<std::tuple<EdgeId, EdgeId, Color>> bad;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    at.clear();
    for (EdgeId e : g.incident_edges(x)) {
      if (colors[e] != kBlank) at.emplace_back(colors[e], e);
    }
    std::sort(at.begin(), at.end());
    for (std::size_t i = 0; i < at.size(); ++i) {
      for (std::size_t j = i + 1; j < at.size() && at[j].first == at[i].first; ++j) {
        bad.emplace_back(at[i].second, at[j].second, at[i].first);
      }
    }
  }
  std::sort(bad.begin(), bad.end());
  bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
  for (auto [e, f, c] : bad) rep.violations.push_back({e, f, c});
  rep.proper = rep.violations.empty();
  return rep;
}

namespace {

class Backtracker {
 public:
  Backtracker(const Multigraph& g, int r) : g_(g), r_(r), color_(g.num_edges(), kBlank) {
    order_.resize(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) order_[e] = e;
    auto weight = [&](EdgeId e) { return g.degree(g.first(e)) + g.degree(g.second(e)); };
    std::stable_sort(order_.begin(), order_.end(), [&](EdgeId a, EdgeId b) { return weight(a) > weight(b); });
  }

  bool solve() { return place(0, 0); }

 private:
  bool free_at(Vertex x, Color c) const {
    for (EdgeId f : g_.incident_edges(x)) {
      if (color_[f] == c) return false;
    }
    return true;
  }

  // Colors above `used` are interchangeable, so only the first new one is tried.
  bool place(std::size_t i, int used) {
    if (i == order_.size()) return true;
    EdgeId e = order_[i];
    int top = std::min(r_, used + 1);
    for (Color c = 0; c < top; ++c) {
      if (!free_at(g_.first(e), c) || !free_at(g_.second(e), c)) continue;
      color_[e] = c;
      if (place(i + 1, std::max(used, c + 1))) return true;
      color_[e] = kBlank;
    }
    return false;
  }

  const Multigraph& g_;
  int r_;
  std::vector<Color> color_;
  std::vector<EdgeId> order_;
};

}  // namespace

int brute_force_chromatic_index(const Multigraph& g) {
  if (g.num_edges() > 12) throw PreconditionError("brute force is limited to 12 edges");
  if (g.num_edges() == 0) return 0;
  for (int r = std::max(1, g.max_degree());; ++r) {
    if (Backtracker(g, r).solve()) return r;
  }
}

void for_each_small_multigraph(int n, int max_edges, const std::function<void(const Multigraph&)>& visit) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  // Nondecreasing pair indices enumerate each multiset once.
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    visit(Multigraph(n, edges));
    if (static_cast<int>(edges.size()) == max_edges) return;
    for (std::size_t p = from; p < pairs.size(); ++p) {
      edges.push_back(pairs[p]);
      grow(p);
      edges.pop_back();
    }
  };
  grow(0);
}

}  // namespace shannon

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shannon/types.hpp"

namespace shannon {

// Loopless undirected multigraph with stable edge ids 0..m-1 and
// per-vertex incidence lists in CSR form.
class Multigraph {
 public:
  Multigraph() = default;
  // Throws PreconditionError on self-loops or out-of-range endpoints.
  Multigraph(int num_vertices, const std::vector<std::pair<Vertex, Vertex>>& edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(ends_.size()); }

  Vertex first(EdgeId e) const { return ends_[e].first; }
  Vertex second(EdgeId e) const { return ends_[e].second; }
  Vertex min_end(EdgeId e) const { return std::min(ends_[e].first, ends_[e].second); }
  std::pair<Vertex, Vertex> endpoints(EdgeId e) const { return ends_[e]; }
  bool incident(EdgeId e, Vertex x) const { return ends_[e].first == x || ends_[e].second == x; }
  // The endpoint of e that is not x. Precondition: x is an endpoint of e.
  Vertex other(EdgeId e, Vertex x) const {
    return ends_[e].first == x ? ends_[e].second : ends_[e].first;
  }
  // The common vertex of two distinct edges, or kNoVertex if they share
  // none. For parallel edges the smaller endpoint is returned.
  Vertex shared_vertex(EdgeId e, EdgeId f) const;

  std::span<const EdgeId> incident_edges(Vertex x) const {
    return {inc_.data() + offset_[x], inc_.data() + offset_[x + 1]};
  }
  int degree(Vertex x) const { return offset_[x + 1] - offset_[x]; }
  int max_degree() const { return max_degree_; }
  int max_multiplicity() const { return max_mult_; }
  // Number of parallel edges between x and y, O(deg x).
  int multiplicity(Vertex x, Vertex y) const;

  // "n m" header followed by one "u v" line per edge.
  std::string serialize() const;

 private:
  int n_ = 0;
  int max_degree_ = 0;
  int max_mult_ = 0;
  std::vector<std::pair<Vertex, Vertex>> ends_;
  std::vector<std::int32_t> offset_{0};
  std::vector<EdgeId> inc_;
};

// Parses the text format: '#' comment lines, then "n m", then m lines "u v".
// Throws FormatError.
Multigraph parse_graph(std::string_view text);
Multigraph read_graph_file(const std::string& path);

// Random multigraph with max degree <= max_degree and multiplicity <=
// max_mult, close to n*max_degree/2 edges. Reproducible from the seed.
// Requires n >= 2, max_degree >= 1, 1 <= max_mult <= max_degree.
Multigraph random_multigraph(int n, int max_degree, int max_mult, std::uint64_t seed);

// The fat triangle: three vertices, each pair joined by d/2 parallel edges.
// Its chromatic index is 3d/2. Requires even d >= 2.
Multigraph shannon_extremal(int max_degree);

}  // namespace shannon

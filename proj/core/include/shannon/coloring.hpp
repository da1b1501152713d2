#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shannon/multigraph.hpp"

namespace shannon {

// Number of colors in Shannon's bound, floor(3*Delta/2).
inline int shannon_bound(int max_degree) { return 3 * max_degree / 2; }
// Number of colors in Vizing's bound, Delta + mu.
inline int vizing_bound(int max_degree, int max_mult) { return max_degree + max_mult; }

// Proper partial coloring with palette {0..r-1} and kBlank for uncolored
// edges. Keeps an n x r occupancy table so "which edge at x has color c"
// is a single lookup; every such lookup is counted.
class PartialColoring {
 public:
  PartialColoring(const Multigraph& g, int num_colors);

  const Multigraph& graph() const { return *g_; }
  int num_colors() const { return r_; }
  Color color(EdgeId e) const { return color_[e]; }
  bool colored(EdgeId e) const { return color_[e] != kBlank; }
  int colored_count() const { return colored_; }
  int uncolored_count() const { return g_->num_edges() - colored_; }
  std::span<const Color> colors() const { return color_; }

  // Edge at x with color c, or kNoEdge.
  EdgeId edge_at(Vertex x, Color c) const {
    ++lookups_;
    return occ_[static_cast<std::size_t>(x) * r_ + c];
  }
  bool missing(Vertex x, Color c) const { return edge_at(x, c) == kNoEdge; }
  std::vector<Color> missing_set(Vertex x) const;
  // Smallest color missing at x, or kBlank if none.
  Color min_missing(Vertex x) const;
  // Smallest color missing at x other than `skip`, or kBlank.
  Color min_missing_except(Vertex x, Color skip) const;
  // Smallest color missing at both x and y, or kBlank.
  Color min_common_missing(Vertex x, Vertex y) const;
  // Number of edges at x colored a or b (a == b counts once).
  int degree_in(Vertex x, Color a, Color b) const;

  // Throws ColoringError if e is colored, c is out of range, or c already
  // appears at an endpoint of e.
  void assign(EdgeId e, Color c);
  // Throws ColoringError if e is blank.
  void unassign(EdgeId e);

  std::uint64_t lookups() const { return lookups_; }
  void reset_lookups() const { lookups_ = 0; }

  // Order-sensitive hash of the color vector.
  std::uint64_t fingerprint() const;

  friend bool operator==(const PartialColoring& a, const PartialColoring& b) {
    return a.g_ == b.g_ && a.r_ == b.r_ && a.color_ == b.color_;
  }

 private:
  const Multigraph* g_;
  int r_;
  int colored_ = 0;
  std::vector<Color> color_;
  std::vector<EdgeId> occ_;
  mutable std::uint64_t lookups_ = 0;
};

// Smallest color missing at both endpoints of the uncolored edge e, if any.
// Throws PreconditionError if e is colored.
std::optional<Color> is_happy(const PartialColoring& phi, EdgeId e);

// Full rescan over every vertex, independent of the occupancy table.
bool is_proper(const Multigraph& g, std::span<const Color> colors);

// Number of distinct colors appearing on colored edges.
int colors_used(std::span<const Color> colors);

// "edge_id u v color" lines followed by "# colors_used K".
std::string serialize_coloring(const Multigraph& g, std::span<const Color> colors);
// Parses serialize_coloring output against g. Throws FormatError.
std::vector<Color> parse_coloring(const Multigraph& g, std::string_view text);

}  // namespace shannon

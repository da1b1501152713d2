#include "shannon/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "shannon/rng.hpp"

namespace shannon {

PartialColoring::PartialColoring(const Multigraph& g, int num_colors)
    : g_(&g),
      r_(num_colors),
      color_(g.num_edges(), kBlank),
      occ_(static_cast<std::size_t>(g.num_vertices()) * std::max(num_colors, 0), kNoEdge) {
  if (num_colors < 1) throw PreconditionError("palette must have at least one color");
}

std::vector<Color> PartialColoring::missing_set(Vertex x) const {
  std::vector<Color> out;
  for (Color c = 0; c < r_; ++c) {
    if (missing(x, c)) out.push_back(c);
  }
  return out;
}

Color PartialColoring::min_missing(Vertex x) const {
  for (Color c = 0; c < r_; ++c) {
    if (missing(x, c)) return c;
  }
  return kBlank;
}

Color PartialColoring::min_missing_except(Vertex x, Color skip) const {
  for (Color c = 0; c < r_; ++c) {
    if (c != skip && missing(x, c)) return c;
  }
  return kBlank;
}

Color PartialColoring::min_common_missing(Vertex x, Vertex y) const {
  for (Color c = 0; c < r_; ++c) {
    if (missing(x, c) && missing(y, c)) return c;
  }
  return kBlank;
}

int PartialColoring::degree_in(Vertex x, Color a, Color b) const {
  int d = edge_at(x, a) != kNoEdge;
  if (b != a) d += edge_at(x, b) != kNoEdge;
  return d;
}

void PartialColoring::assign(EdgeId e, Color c) {
  if (color_[e] != kBlank) throw ColoringError("edge " + std::to_string(e) + " is already colored");
  if (c < 0 || c >= r_) throw ColoringError("color " + std::to_string(c) + " out of range");
  auto [u, v] = g_->endpoints(e);
  EdgeId& at_u = occ_[static_cast<std::size_t>(u) * r_ + c];
  EdgeId& at_v = occ_[static_cast<std::size_t>(v) * r_ + c];
  if (at_u != kNoEdge || at_v != kNoEdge) {
    throw ColoringError("color " + std::to_string(c) + " already present at an endpoint of edge " +
                        std::to_string(e));
  }
  at_u = e;
  at_v = e;
  color_[e] = c;
  ++colored_;
}

void PartialColoring::unassign(EdgeId e) {
  Color c = color_[e];
  if (c == kBlank) throw ColoringError("edge " + std::to_string(e) + " is not colored");
  auto [u, v] = g_->endpoints(e);
  occ_[static_cast<std::size_t>(u) * r_ + c] = kNoEdge;
  occ_[static_cast<std::size_t>(v) * r_ + c] = kNoEdge;
  color_[e] = kBlank;
  --colored_;
}

std::uint64_t PartialColoring::fingerprint() const {
  std::uint64_t h = splitmix64(static_cast<std::uint64_t>(r_));
  for (Color c : color_) h = splitmix64(h ^ static_cast<std::uint32_t>(c));
  return h;
}

std::optional<Color> is_happy(const PartialColoring& phi, EdgeId e) {
  if (phi.colored(e)) throw PreconditionError("edge " + std::to_string(e) + " is already colored");
  auto [u, v] = phi.graph().endpoints(e);
  Color c = phi.min_common_missing(u, v);
  if (c == kBlank) return std::nullopt;
  return c;
}

bool is_proper(const Multigraph& g, std::span<const Color> colors) {
  std::vector<Color> seen;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    seen.clear();
    for (EdgeId e : g.incident_edges(x)) {
      if (colors[e] != kBlank) seen.push_back(colors[e]);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

int colors_used(std::span<const Color> colors) {
  std::vector<char> seen;
  int k = 0;
  for (Color c : colors) {
    if (c < 0) continue;
    if (static_cast<std::size_t>(c) >= seen.size()) seen.resize(c + 1, 0);
    if (!seen[c]) {
      seen[c] = 1;
      ++k;
    }
  }
  return k;
}

std::string serialize_coloring(const Multigraph& g, std::span<const Color> colors) {
  std::ostringstream out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    out << e << ' ' << g.first(e) << ' ' << g.second(e) << ' ' << colors[e] << '\n';
  }
  out << "# colors_used " << colors_used(colors) << '\n';
  return out.str();
}

std::vector<Color> parse_coloring(const Multigraph& g, std::string_view text) {
  std::vector<Color> colors(g.num_edges(), kBlank);
  std::vector<char> seen(g.num_edges(), 0);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long e, u, v, c;
    std::string extra;
    if (!(fields >> e >> u >> v >> c) || (fields >> extra)) {
      throw FormatError("line " + std::to_string(line_no) + ": expected \"edge_id u v color\"");
    }
    if (e < 0 || e >= g.num_edges()) throw FormatError("line " + std::to_string(line_no) + ": bad edge id");
    auto [a, b] = g.endpoints(static_cast<EdgeId>(e));
    if (!((u == a && v == b) || (u == b && v == a))) {
      throw FormatError("line " + std::to_string(line_no) + ": endpoints do not match the graph");
    }
    if (c < kBlank || c > INT32_MAX) throw FormatError("line " + std::to_string(line_no) + ": bad color");
    if (seen[e]) throw FormatError("line " + std::to_string(line_no) + ": duplicate edge id");
    seen[e] = 1;
    colors[e] = static_cast<Color>(c);
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!seen[e]) throw FormatError("edge " + std::to_string(e) + " missing from coloring");
  }
  return colors;
}

}  // namespace shannon

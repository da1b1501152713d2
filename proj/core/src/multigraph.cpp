#include "shannon/multigraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "shannon/rng.hpp"

namespace shannon {

Multigraph::Multigraph(int num_vertices, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : n_(num_vertices), ends_(edges) {
  if (num_vertices < 0) throw PreconditionError("negative vertex count");
  std::vector<std::int32_t> deg(n_, 0);
  for (std::size_t i = 0; i < ends_.size(); ++i) {
    auto [u, v] = ends_[i];
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
      throw PreconditionError("edge " + std::to_string(i) + " has an endpoint out of range");
    }
    if (u == v) throw PreconditionError("edge " + std::to_string(i) + " is a self-loop");
    ++deg[u];
    ++deg[v];
  }
  offset_.assign(n_ + 1, 0);
  for (int x = 0; x < n_; ++x) {
    offset_[x + 1] = offset_[x] + deg[x];
    max_degree_ = std::max(max_degree_, deg[x]);
  }
  inc_.resize(offset_[n_]);
  std::vector<std::int32_t> fill(offset_.begin(), offset_.end() - 1);
  for (EdgeId e = 0; e < num_edges(); ++e) {
    inc_[fill[ends_[e].first]++] = e;
    inc_[fill[ends_[e].second]++] = e;
  }
  std::vector<int> count(n_, 0);
  for (Vertex x = 0; x < n_; ++x) {
    for (EdgeId e : incident_edges(x)) max_mult_ = std::max(max_mult_, ++count[other(e, x)]);
    for (EdgeId e : incident_edges(x)) count[other(e, x)] = 0;
  }
}

Vertex Multigraph::shared_vertex(EdgeId e, EdgeId f) const {
  auto [a, b] = ends_[e];
  if (a > b) std::swap(a, b);
  if (incident(f, a)) return a;
  if (incident(f, b)) return b;
  return kNoVertex;
}

int Multigraph::multiplicity(Vertex x, Vertex y) const {
  int k = 0;
  for (EdgeId e : incident_edges(x)) k += other(e, x) == y;
  return k;
}

std::string Multigraph::serialize() const {
  std::ostringstream out;
  out << n_ << ' ' << num_edges() << '\n';
  for (auto [u, v] : ends_) out << u << ' ' << v << '\n';
  return out.str();
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next non-comment, non-blank line; false at end of input.
  bool next(std::string_view& line) {
    while (pos_ < text_.size()) {
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      std::size_t first = line.find_first_not_of(" \t");
      if (first == std::string_view::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  }

  int line_no() const { return line_no_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_no_ = 0;
};

// Parses exactly `count` integers separated by whitespace.
bool parse_ints(std::string_view line, long long* out, int count) {
  const char* p = line.data();
  const char* end = p + line.size();
  for (int i = 0; i < count; ++i) {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    auto [q, ec] = std::from_chars(p, end, out[i]);
    if (ec != std::errc() || q == p) return false;
    p = q;
  }
  while (p < end && (*p == ' ' || *p == '\t')) ++p;
  return p == end;
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  long long head[2];
  if (!reader.next(line)) throw FormatError("missing \"n m\" header");
  if (!parse_ints(line, head, 2) || head[0] < 0 || head[1] < 0 || head[0] > INT32_MAX ||
      head[1] > INT32_MAX) {
    throw FormatError("line " + std::to_string(reader.line_no()) + ": bad header");
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(head[1]));
  for (long long i = 0; i < head[1]; ++i) {
    if (!reader.next(line)) {
      throw FormatError("expected " + std::to_string(head[1]) + " edges, found " + std::to_string(i));
    }
    long long uv[2];
    if (!parse_ints(line, uv, 2)) {
      throw FormatError("line " + std::to_string(reader.line_no()) + ": expected \"u v\"");
    }
    if (uv[0] < 0 || uv[1] < 0 || uv[0] >= head[0] || uv[1] >= head[0]) {
      throw FormatError("line " + std::to_string(reader.line_no()) + ": vertex out of range");
    }
    if (uv[0] == uv[1]) throw FormatError("line " + std::to_string(reader.line_no()) + ": self-loop");
    edges.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
  }
  if (reader.next(line)) throw FormatError("line " + std::to_string(reader.line_no()) + ": trailing data");
  return Multigraph(static_cast<int>(head[0]), edges);
}

Multigraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

Multigraph random_multigraph(int n, int max_degree, int max_mult, std::uint64_t seed) {
  if (n < 2 || max_degree < 1 || max_mult < 1 || max_mult > max_degree) {
    throw PreconditionError("random_multigraph requires n >= 2, degree >= 1, 1 <= mu <= degree");
  }
  Rng rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<int> deg(n, 0);
  std::vector<Vertex> open;
  std::vector<int> pos(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    pos[v] = static_cast<int>(open.size());
    open.push_back(v);
  }
  std::unordered_map<std::uint64_t, int> mult;
  auto close = [&](Vertex v) {
    Vertex last = open.back();
    open[pos[v]] = last;
    pos[last] = pos[v];
    open.pop_back();
    pos[v] = -1;
  };
  const std::size_t target = static_cast<std::size_t>(n) * max_degree / 2;
  const int patience = 64 + 8 * n;
  int misses = 0;
  while (edges.size() < target && open.size() >= 2 && misses < patience) {
    Vertex u = open[rng.below(open.size())];
    Vertex v = open[rng.below(open.size())];
    if (u == v) {
      ++misses;
      continue;
    }
    std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
    int& k = mult[key];
    if (k >= max_mult) {
      ++misses;
      continue;
    }
    ++k;
    misses = 0;
    edges.emplace_back(u, v);
    if (++deg[u] == max_degree) close(u);
    if (++deg[v] == max_degree) close(v);
  }
  return Multigraph(n, edges);
}

Multigraph shannon_extremal(int max_degree) {
  if (max_degree < 2 || max_degree % 2 != 0) throw PreconditionError("fat triangle needs an even degree >= 2");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [u, v] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{0, 2}}) {
    for (int i = 0; i < max_degree / 2; ++i) edges.emplace_back(u, v);
  }
  return Multigraph(3, edges);
}

}  // namespace shannon

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shannon/multigraph.hpp"
#include "shannon/verify.hpp"

namespace shannon::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerify = 1;
inline constexpr int kExitConfig = 2;

// Version of the stats line schema, emitted as "v" on every line.
inline constexpr int kStatsVersion = 1;

enum class Algorithm { kDet, kSeq, kDist, kVizing };

std::optional<Algorithm> parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm a);
// floor(3 Delta / 2) for the Shannon solvers, Delta + mu for Vizing.
int algorithm_bound(Algorithm a, const Multigraph& g);

struct RunConfig {
  Algorithm algorithm = Algorithm::kDet;
  std::optional<int> ell;
  std::optional<std::int64_t> budget;
  std::uint64_t seed = 0;
  bool debug_invariants = false;
};

// Empty if the flag combination is valid, otherwise the reason.
std::string validate(const RunConfig& cfg);

// Reads SHANNON_DEBUG_INVARIANTS.
bool debug_invariants_from_env();

struct ColorRun {
  std::vector<Color> colors;
  // JSON lines, without trailing newlines. No wall-clock fields.
  std::vector<std::string> stats;
  VerificationReport report;
};

// Runs the solver and verifies its output against the algorithm's bound.
ColorRun run_color(const Multigraph& g, const RunConfig& cfg);

// Where a command gets its graph: a file, the fat triangle, or the
// random generator.
struct GraphSource {
  std::string path;
  std::optional<int> extremal;
  int n = 0;
  int max_degree = 0;
  int max_mult = 1;
  std::uint64_t seed = 0;
};

// Throws FormatError or PreconditionError.
Multigraph load_graph(const GraphSource& src);

// Paths equal to "-" write to `out`. Empty paths are skipped.
int cmd_generate(const GraphSource& src, const std::string& out_path, std::ostream& out, std::ostream& err);
int cmd_color(const GraphSource& src, const RunConfig& cfg, const std::string& out_path,
              const std::string& stats_path, std::ostream& out, std::ostream& err);
// `bound` is "shannon", "vizing", an integer, or empty for the larger of
// the Shannon and Vizing bounds.
int cmd_verify(const std::string& graph_path, const std::string& coloring_path, const std::string& bound,
               std::ostream& out, std::ostream& err);

// Grid such as "n=256,512;d=4;mu=2;seeds=10". Keys n, d, mu, seeds; mu
// also accepts "half" (ceil(d/2)) and "full" (d).
struct BenchSpec {
  std::vector<int> n;
  std::vector<int> max_degree;
  std::vector<std::string> max_mult;
  int seeds = 1;
};

// Throws FormatError.
BenchSpec parse_grid(std::string_view text);

// One aggregated JSON line per grid cell, including wall times.
int cmd_bench(const BenchSpec& spec, const RunConfig& cfg, const std::string& out_path, std::ostream& out,
              std::ostream& err);

}  // namespace shannon::cli

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shannon/chain_builders.hpp"
#include "shannon/rng.hpp"

namespace shannon {

// Default path cap parameter for practical runs.
inline int default_ell(int max_degree) { return std::max(16, 4 * max_degree * max_degree); }

struct MssaParams {
  int ell = 16;
  // Maximum number of while-loop entries, counting the terminating one.
  // Zero means unbounded.
  std::int64_t max_iters = 0;
  // Rescan Inv1-Inv3, properness and visited bookkeeping every iteration.
  bool debug_invariants = false;
};

// One step F_i + P_i of a multi-step chain. `path` is the truncated P_i for
// committed steps and the candidate path for the last step; `full_path` is
// the 2*ell path P_i was cut from. `first` is the color of path edge 1 in
// Shift(psi_i, fan) (or the happy color), `second` the partner color.
struct ChainStep {
  Fan fan;
  PathChain path;
  PathChain full_path;
  Color first = kBlank;
  Color second = kBlank;
};

struct MultiStepChain {
  std::vector<ChainStep> steps;

  // F_0 + P_0 + ... with shared edges listed once.
  std::vector<EdgeId> edges() const;
  std::vector<Vertex> vertices(const Multigraph& g) const;
};

enum class MssaOutcome { kSuccess, kBudgetExhausted };

// Where a backward iteration found its first intersection.
struct Intersection {
  std::int64_t iteration = 0;
  int k = 0;
  int j = 0;
  bool at_vertex = false;
  // Owning element: a vertex of V(F_j) or an edge of E_int(P_j).
  std::int32_t element = -1;
};

struct ExecutionRecord {
  EdgeId edge = kNoEdge;
  Vertex pivot = kNoVertex;
  // +1 per forward iteration, -r per r-backward iteration.
  std::vector<int> d;
  std::vector<Intersection> backtracks;
  EdgeId terminus_edge = kNoEdge;
  Vertex terminus_vertex = kNoVertex;
  // While-loop entries including the terminating success test.
  std::int64_t iterations = 0;
  MssaOutcome outcome = MssaOutcome::kSuccess;
  int chain_length = 0;
};

struct MssaResult {
  std::optional<MultiStepChain> chain;
  ExecutionRecord record;
};

// Multi-step Shannon algorithm for uncolored e with pivot x. phi is used as
// scratch and restored exactly before returning, on success and on budget
// exhaustion. Throws InvariantError on the unreachable failure branch.
MssaResult mssa(PartialColoring& phi, EdgeId e, Vertex x, const MssaParams& params, Rng& rng);

// Independent structural check of a multi-step chain against phi: step
// gluing, per-step Shannon chain shape in the progressively shifted
// coloring, non-intersection, and happiness of the whole chain. Returns an
// empty string if valid, otherwise a description of the first violation.
std::string validate_multistep_chain(const PartialColoring& phi, const MultiStepChain& chain, int ell);

// Colors of the last path, for augmentation preference.
inline std::pair<Color, Color> final_pair(const MultiStepChain& c) {
  return {c.steps.back().first, c.steps.back().second};
}

struct SequentialParams {
  int ell = 0;  // 0 selects default_ell(Delta)
  std::uint64_t seed = 0;
  bool debug_invariants = false;
  bool keep_records = false;
};

struct SequentialResult {
  PartialColoring coloring;
  std::int64_t total_iterations = 0;
  std::vector<std::int64_t> per_edge_iterations;
  std::int64_t total_chain_length = 0;
  int max_chain_length = 0;
  std::vector<ExecutionRecord> records;
};

// Randomized sequential coloring: repeatedly pick a uniformly random
// uncolored edge and endpoint, run MSSA without a budget, augment.
SequentialResult color_sequential_random(const Multigraph& g, const SequentialParams& params);

}  // namespace shannon

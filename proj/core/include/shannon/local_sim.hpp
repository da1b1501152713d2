#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "shannon/mssa.hpp"

namespace shannon {

// Simple undirected graph on 0..n-1 with sorted, duplicate-free adjacency.
struct ConflictGraph {
  std::vector<std::vector<int>> adj;

  int size() const { return static_cast<int>(adj.size()); }
  std::int64_t num_edges() const;
};

// Each vertex draws an independent U(0,1) value and joins W iff its draw
// strictly exceeds every neighbor's draw. Returns W in increasing order.
std::vector<int> random_independent_set(const ConflictGraph& graph, Rng& rng);

struct DistributedParams {
  int ell = 0;               // 0 selects default_ell(Delta)
  std::int64_t budget = 0;   // MSSA budget t; 0 selects ceil(4 log2 n)
  std::uint64_t seed = 0;
  int starvation_limit = 50;
  bool debug_invariants = false;
};

// Simulated rounds charged per stage: kRoundsPerStage * ell * t, one ell*t
// each for chain construction, conflict detection and augmentation.
inline constexpr int kRoundsPerStage = 3;

std::int64_t default_budget(int n);

struct StageResult {
  int stage = 0;
  int uncolored = 0;
  // Edges whose MSSA terminated within the budget, in increasing id order.
  std::vector<EdgeId> survivors;
  std::vector<MultiStepChain> chains;       // parallel to survivors
  std::vector<std::pair<Color, Color>> pairs;  // final path colors
  ConflictGraph conflicts;                  // on indices into survivors
  std::int64_t conflict_edges = 0;
  std::vector<int> independent;             // indices into survivors
  std::int64_t rounds_charged = 0;
  std::int64_t mssa_iterations = 0;
  std::uint64_t base_hash_before = 0;
  std::uint64_t base_hash_after = 0;
  int colored = 0;
};

// Steps 1-3 of one stage against the frozen coloring phi: an MSSA run per
// uncolored edge with a private random stream, the conflict graph of the
// surviving chains and a random independent set. phi is not modified.
StageResult run_stage(PartialColoring& phi, int stage, int ell, std::int64_t budget,
                      const DistributedParams& params);

// Augments the chains selected by the stage, in increasing edge-id order.
void augment_stage(PartialColoring& phi, StageResult& result);

struct DistributedResult {
  PartialColoring coloring;
  int stages = 0;
  std::int64_t rounds = 0;
  int ell = 0;
  std::int64_t budget = 0;
  std::vector<StageResult> stage_log;  // chains dropped, counters kept
};

// Called after steps 1-3 of each stage, before augmentation.
using StageObserver = std::function<void(const StageResult&, PartialColoring&)>;

class StarvationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Runs stages until every edge is colored. Throws StarvationError after
// starvation_limit consecutive stages without progress.
DistributedResult color_distributed(const Multigraph& g, const DistributedParams& params,
                                    const StageObserver& observer = nullptr);

}  // namespace shannon

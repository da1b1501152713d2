#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "shannon/chain_builders.hpp"

namespace shannon {

// Uncolored edges keyed by the unordered color pair (stored as min, max)
// that the first Shannon fan at pivot min V(e) reports.
using GammaPartition = std::map<std::pair<Color, Color>, std::vector<EdgeId>>;

GammaPartition gamma_partition(const PartialColoring& phi, const std::vector<EdgeId>& uncolored);

// The largest bucket; ties go to the smallest pair.
GammaPartition::const_iterator largest_bucket(const GammaPartition& buckets);

struct BatchStats {
  std::pair<Color, Color> pair{kBlank, kBlank};
  int bucket_count = 0;
  // Sizes of all buckets, in pair order.
  std::vector<int> bucket_sizes;
  int batch_size = 0;
  int chains_computed = 0;
  int chains_augmented = 0;
  int dom_before = 0;
  int dom_after = 0;
  // Edge lists of the augmented chains, in augmentation order.
  std::vector<std::vector<EdgeId>> augmented;
};

// Computes a Shannon chain for every edge of `batch` against the current
// coloring, then augments them in the given order, skipping a chain when one
// of V(F) or vEnd(P) was already touched by an augmented chain of this batch.
// Throws InvariantError if the progress bound |batch| / (20 Delta^2) fails.
BatchStats augment_chain_set(PartialColoring& phi, const std::vector<EdgeId>& batch);

struct DeterministicResult {
  PartialColoring coloring;
  int iterations = 0;
  std::vector<BatchStats> batches;
};

// Repeats partition, largest bucket, batch augmentation until every edge is
// colored. Palette floor(3 Delta / 2); Delta <= 1 takes color 0 directly.
// With keep_chains false the per-batch chain lists are dropped.
DeterministicResult color_deterministic(const Multigraph& g, bool keep_chains = false);

}  // namespace shannon

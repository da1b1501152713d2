#pragma once

#include <cstdint>

#include "shannon/chain.hpp"

namespace shannon {

// Output of the Vizing fan searches: color lies in M(vEnd(fan)) and in
// M(vEnd(fan|j)), with 1 <= j <= length(fan). j == length(fan) means the
// fan is happy (first search) or stopped on beta (next search).
struct VizingFanResult {
  Fan fan;
  Color color = kBlank;
  int j = 0;
};

// First Vizing fan for uncolored e with pivot x, palette Delta + mu.
VizingFanResult first_vizing_fan(const PartialColoring& phi, EdgeId e, Vertex x);

// Next Vizing fan: requires M(x) \ M(y) nonempty and beta in M(y), where y
// is the other endpoint of e. The candidate set of y starts without beta.
VizingFanResult next_vizing_fan(const PartialColoring& phi, EdgeId e, Vertex x, Color beta);

struct VizingStats {
  std::int64_t fan_length_total = 0;
  std::int64_t path_length_total = 0;
  int max_chain_length = 0;
};

// Colors every edge in id order with a single-step Vizing chain, pivot at
// the smaller endpoint. Palette Delta + mu; graphs with Delta <= 1 take
// color 0 directly.
PartialColoring color_vizing(const Multigraph& g, VizingStats* stats = nullptr);

}  // namespace shannon

#pragma once

#include "shannon/chain.hpp"

namespace shannon {

// A fan together with the color pair that drives the path built after it.
// When the fan is happy, first == second is the color that makes it happy.
struct FanChoice {
  Fan fan;
  Color first = kBlank;
  Color second = kBlank;
};

// First Shannon fan for an uncolored edge e and pivot x. Returns a fan of
// length <= 2 that is either happy (first == second) or (phi, first
// second)-hopeful with first in M(x) and second in M(vEnd). Requires a
// palette of floor(3*Delta/2) colors. Throws InvariantError if the palette
// is too small for the common-missing-color argument to hold.
FanChoice first_shannon_fan(const PartialColoring& phi, EdgeId e, Vertex x);

// Next Shannon fan: as above, given a pair with alpha in M(x) \ M(y) and
// beta in M(y), where y is the other endpoint of e. If second == beta then
// first == alpha; otherwise {first, second} is disjoint from {alpha, beta}.
FanChoice next_shannon_fan(const PartialColoring& phi, EdgeId e, Vertex x, Color alpha, Color beta);

}  // namespace shannon

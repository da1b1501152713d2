#pragma once

#include <vector>

#include "shannon/shannon_fans.hpp"

namespace shannon {

// C = F + P. The path starts at End(fan) with v_start = pivot; its edges
// after the first alternate alpha, beta, alpha, ... in Shift(phi, fan).
// For a happy fan, path = (End(fan)) and alpha == beta is the happy color.
struct ShannonChain {
  Fan fan;
  PathChain path;
  Color alpha = kBlank;
  Color beta = kBlank;

  // F + P with the shared edge End(F) = Start(P) listed once.
  std::vector<EdgeId> edges() const;
};

// Single-step Shannon chain for uncolored e with pivot x, untruncated.
// Always phi-happy. phi is restored before returning.
ShannonChain shannon_chain(PartialColoring& phi, EdgeId e, Vertex x);

// First chain of a multi-step chain. Paths are read with cap 2*ell, so the
// result is either happy or has a hopeful fan and length(path) == 2*ell.
// Requires ell >= 3. phi is restored before returning.
ShannonChain first_chain(PartialColoring& phi, EdgeId e, Vertex x, int ell);

// Subsequent chain given the color pair of the previous path: alpha in
// M(x) \ M(y), beta in M(y). Requires ell >= 3. phi is restored.
ShannonChain next_chain(PartialColoring& phi, EdgeId e, Vertex x, Color alpha, Color beta, int ell);

// Single-step Vizing chain for palette Delta + mu: the happy fan, F plus its
// path when F is successful, and F|j plus its path otherwise, with alpha =
// min M(x). Always phi-happy. phi is restored.
ShannonChain vizing_chain(PartialColoring& phi, EdgeId e, Vertex x);

}  // namespace shannon

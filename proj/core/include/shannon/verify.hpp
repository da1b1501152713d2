#pragma once

#include <functional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "shannon/coloring.hpp"

namespace shannon {

struct Violation {
  EdgeId e = kNoEdge;
  EdgeId f = kNoEdge;
  Color color = kBlank;
};

struct VerificationReport {
  bool proper = true;
  int colors_used = 0;
  int bound = 0;
  int uncolored = 0;
  // Largest color index in use, or -1.
  Color max_color = kBlank;
  std::vector<Violation> violations;

  bool within_bound() const { return max_color < bound && colors_used <= bound; }
  // Proper, complete and within the bound.
  bool ok() const { return proper && uncolored == 0 && within_bound(); }
};

// Full rescan of every vertex; does not consult any occupancy table.
VerificationReport verify(const Multigraph& g, std::span<const Color> colors, int bound);

// Exact chromatic index by backtracking. Throws PreconditionError if the
// graph has more than 12 edges.
int brute_force_chromatic_index(const Multigraph& g);

// Every loopless multigraph on n vertices with at most max_edges edges,
// generated as edge multisets over the vertex pairs (no isomorphism pruning).
void for_each_small_multigraph(int n, int max_edges, const std::function<void(const Multigraph&)>& visit);

}  // namespace shannon

#include <gtest/gtest.h>

#include "shannon/verify.hpp"
#include "support.hpp"

using namespace shannon;

TEST(PartialColoring, BlankColoring) {
  Multigraph g = shannon_extremal(2);
  PartialColoring phi(g, 3);
  EXPECT_EQ(phi.colored_count(), 0);
  EXPECT_TRUE(is_proper(g, phi.colors()));
  for (Vertex x = 0; x < 3; ++x) EXPECT_EQ(phi.missing_set(x), (std::vector<Color>{0, 1, 2}));
}

TEST(PartialColoring, MissingSetAfterOneColor) {
  Multigraph g(2, {{0, 1}});
  PartialColoring phi(g, 3);
  phi.assign(0, 1);
  EXPECT_EQ(phi.missing_set(0), (std::vector<Color>{0, 2}));
  EXPECT_EQ(phi.min_missing(0), 0);
  EXPECT_EQ(phi.min_missing_except(0, 0), 2);
}

TEST(PartialColoring, FatTriangleMissingSets) {
  Multigraph g = shannon_extremal(4);
  // Every pair of edges shares a vertex, so six distinct colors are forced.
  PartialColoring phi(g, 6);
  for (EdgeId e = 0; e < 6; ++e) phi.assign(e, e);
  for (Vertex x = 0; x < 3; ++x) EXPECT_EQ(phi.missing_set(x).size(), 2u);
}

TEST(PartialColoring, AssignUnassignRoundTrip) {
  Multigraph g(3, {{0, 1}, {1, 2}});
  PartialColoring phi(g, 3);
  PartialColoring before = phi;
  phi.assign(0, 2);
  EXPECT_EQ(phi.edge_at(0, 2), 0);
  EXPECT_EQ(phi.edge_at(1, 2), 0);
  phi.unassign(0);
  EXPECT_TRUE(phi == before);
}

TEST(PartialColoring, AssignRejectsConflicts) {
  Multigraph g(3, {{0, 1}, {1, 2}});
  PartialColoring phi(g, 3);
  phi.assign(0, 1);
  EXPECT_THROW(phi.assign(1, 1), ColoringError);
  EXPECT_THROW(phi.assign(0, 2), ColoringError);
  EXPECT_THROW(phi.assign(1, 3), ColoringError);
  EXPECT_THROW(phi.assign(1, -1), ColoringError);
  EXPECT_THROW(phi.unassign(1), ColoringError);
  EXPECT_EQ(phi.colored_count(), 1);
}

TEST(IsHappy, BlankColoringGivesZero) {
  Multigraph g = shannon_extremal(4);
  PartialColoring phi(g, 6);
  EXPECT_EQ(is_happy(phi, 3), 0);
}

TEST(IsHappy, ConstructedMissingSets) {
  // Path a-x-y-b with e = xy blank, r = 3. Coloring ax with 2 leaves
  // M(x) = {0,1}; coloring yb with 0 and a parallel yb with 1 leaves M(y) = {2}.
  Multigraph g(4, {{1, 2}, {0, 1}, {2, 3}, {2, 3}});
  PartialColoring phi(g, 3);
  phi.assign(1, 2);
  phi.assign(2, 0);
  phi.assign(3, 1);
  EXPECT_EQ(phi.missing_set(1), (std::vector<Color>{0, 1}));
  EXPECT_EQ(phi.missing_set(2), (std::vector<Color>{2}));
  EXPECT_FALSE(is_happy(phi, 0).has_value());
  // Recolor ax with 0 so M(x) = {1, 2}; now 2 is common.
  phi.unassign(1);
  phi.assign(1, 0);
  EXPECT_EQ(is_happy(phi, 0), 2);
}

TEST(IsHappy, RejectsColoredEdge) {
  Multigraph g(2, {{0, 1}});
  PartialColoring phi(g, 2);
  phi.assign(0, 0);
  EXPECT_THROW(is_happy(phi, 0), PreconditionError);
}

TEST(IsProper, DetectsParallelConflict) {
  Multigraph g(2, {{0, 1}, {0, 1}});
  std::vector<Color> colors{0, 0};
  EXPECT_FALSE(is_proper(g, colors));
  colors[1] = 1;
  EXPECT_TRUE(is_proper(g, colors));
}

TEST(PartialColoring, LookupsAreConstantPerQuery) {
  Multigraph g = random_multigraph(200, 8, 4, 5);
  Rng rng(1);
  PartialColoring phi = support::random_partial(g, 12, rng);
  phi.reset_lookups();
  for (int i = 0; i < 1000; ++i) phi.missing(static_cast<Vertex>(rng.below(200)), static_cast<Color>(rng.below(12)));
  EXPECT_EQ(phi.lookups(), 1000u);
  phi.reset_lookups();
  phi.min_common_missing(0, 1);
  EXPECT_LE(phi.lookups(), 2u * 12u);
}

TEST(PartialColoring, TableMatchesOracleUnderRandomEdits) {
  Multigraph g = random_multigraph(40, 6, 3, 2);
  const int r = 9;
  PartialColoring phi(g, r);
  Rng rng(7);
  for (int step = 0; step < 4000; ++step) {
    EdgeId e = static_cast<EdgeId>(rng.below(g.num_edges()));
    if (phi.colored(e)) {
      phi.unassign(e);
    } else {
      Color c = static_cast<Color>(rng.below(r));
      try {
        phi.assign(e, c);
      } catch (const ColoringError&) {
      }
    }
    if (step % 100 == 0) {
      auto colors = support::to_vector(phi);
      ASSERT_TRUE(oracle::proper(g, colors));
      for (Vertex x = 0; x < g.num_vertices(); ++x) {
        auto m = oracle::missing(g, colors, r, x);
        auto got = phi.missing_set(x);
        ASSERT_EQ(std::set<Color>(got.begin(), got.end()), m);
      }
      ASSERT_EQ(phi.colored_count(), oracle::count_colored(colors));
    }
  }
}

TEST(ColoringFormat, RoundTrip) {
  Multigraph g = shannon_extremal(4);
  std::vector<Color> colors{0, 1, 2, 3, 4, kBlank};
  std::string text = serialize_coloring(g, colors);
  EXPECT_NE(text.find("# colors_used 5"), std::string::npos);
  EXPECT_EQ(parse_coloring(g, text), colors);
}

TEST(ColoringFormat, RejectsMismatch) {
  Multigraph g = shannon_extremal(2);
  EXPECT_THROW(parse_coloring(g, "0 0 1 0\n"), FormatError);
  EXPECT_THROW(parse_coloring(g, "0 0 1 0\n1 1 2 1\n2 0 1 2\n"), FormatError);
  EXPECT_THROW(parse_coloring(g, "0 0 1 0\n1 1 2 x\n2 0 2 2\n"), FormatError);
}

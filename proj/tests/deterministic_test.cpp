#include <gtest/gtest.h>

#include <map>
#include <set>

#include "shannon/deterministic.hpp"
#include "support.hpp"

using namespace shannon;

namespace {

std::vector<EdgeId> all_blank(const PartialColoring& phi) { return support::blank_edges(phi); }

struct ChainShape {
  std::vector<EdgeId> edges;
  std::set<Vertex> gate;
};

ChainShape shape(const Multigraph& g, const ShannonChain& c) {
  ChainShape s{c.edges(), {c.fan.pivot, c.path.v_end}};
  for (EdgeId f : c.fan.edges) s.gate.insert(g.other(f, c.fan.pivot));
  return s;
}

// Runs one batch on phi and checks the augmented chains pairwise against
// both disjointness conditions, using chains recomputed on a snapshot.
void check_batch(PartialColoring& phi, const std::vector<EdgeId>& batch) {
  const Multigraph& g = phi.graph();
  PartialColoring snapshot = phi;
  std::map<EdgeId, ChainShape> shapes;
  for (EdgeId e : batch) shapes[e] = shape(g, shannon_chain(snapshot, e, g.min_end(e)));
  const int before = oracle::count_colored(support::to_vector(phi));
  BatchStats st = augment_chain_set(phi, batch);
  const int after = oracle::count_colored(support::to_vector(phi));
  ASSERT_TRUE(oracle::proper(g, support::to_vector(phi)));
  ASSERT_EQ(after - before, st.chains_augmented);
  const std::int64_t delta = g.max_degree();
  ASSERT_GE(20 * delta * delta * (after - before), static_cast<std::int64_t>(batch.size()));
  ASSERT_EQ(st.augmented.size(), static_cast<std::size_t>(st.chains_augmented));
  std::vector<const ChainShape*> done;
  for (const std::vector<EdgeId>& edges : st.augmented) {
    const ChainShape& s = shapes.at(edges.front());
    ASSERT_EQ(edges, s.edges);
    EXPECT_TRUE(phi.colored(edges.front()));
    for (const ChainShape* o : done) {
      for (EdgeId f : s.edges) {
        ASSERT_EQ(std::count(o->edges.begin(), o->edges.end(), f), 0) << "chains share edge " << f;
      }
      for (Vertex v : s.gate) ASSERT_EQ(o->gate.count(v), 0u) << "chains share gate vertex " << v;
    }
    done.push_back(&s);
  }
}

}  // namespace

TEST(GammaPartition, BlankColoringIsOneHappyBucket) {
  Multigraph g = random_multigraph(100, 6, 3, 1);
  PartialColoring phi(g, 9);
  GammaPartition b = gamma_partition(phi, all_blank(phi));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b.begin()->first, std::make_pair(0, 0));
  EXPECT_EQ(b.begin()->second.size(), static_cast<std::size_t>(g.num_edges()));
}

TEST(GammaPartition, SingleUncoloredEdge) {
  Multigraph g = shannon_extremal(4);
  DeterministicResult full = color_deterministic(g);
  PartialColoring phi = full.coloring;
  phi.unassign(5);
  GammaPartition b = gamma_partition(phi, {5});
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b.begin()->second, std::vector<EdgeId>{5});
}

TEST(GammaPartition, PartitionsAndLargestBucketBound) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int delta = 2 + static_cast<int>(seed % 8);
    Multigraph g = random_multigraph(200, delta, 1 + static_cast<int>(seed % delta), seed);
    Rng rng(seed);
    PartialColoring phi = support::random_partial(g, shannon_bound(g.max_degree()), rng, seed % 2 ? 0.9 : 1.0);
    std::vector<EdgeId> u = all_blank(phi);
    if (u.empty()) continue;
    GammaPartition b = gamma_partition(phi, u);
    std::multiset<EdgeId> seen;
    for (const auto& [pair, edges] : b) {
      EXPECT_LE(pair.first, pair.second);
      for (EdgeId e : edges) {
        seen.insert(e);
        FanChoice f = first_shannon_fan(phi, e, g.min_end(e));
        EXPECT_EQ(std::make_pair(std::min(f.first, f.second), std::max(f.first, f.second)), pair);
      }
    }
    EXPECT_EQ(seen, std::multiset<EdgeId>(u.begin(), u.end()));
    const double d = g.max_degree();
    EXPECT_GE(static_cast<double>(largest_bucket(b)->second.size()), 4.0 * u.size() / (9.0 * d * d));
  }
}

TEST(GammaPartition, LargestBucketTieGoesToSmallestPair) {
  GammaPartition b;
  b[{1, 2}] = {4, 5};
  b[{0, 3}] = {1, 2};
  b[{0, 1}] = {7};
  EXPECT_EQ(largest_bucket(b)->first, std::make_pair(0, 3));
}

TEST(AugmentChainSet, SingleEdgeGetsColored) {
  Multigraph g = shannon_extremal(4);
  PartialColoring phi = color_deterministic(g).coloring;
  phi.unassign(3);
  BatchStats st = augment_chain_set(phi, {3});
  EXPECT_EQ(st.chains_augmented, 1);
  EXPECT_EQ(phi.uncolored_count(), 0);
  EXPECT_TRUE(is_proper(g, phi.colors()));
}

TEST(AugmentChainSet, VertexDisjointChainsBothColored) {
  Multigraph g(4, {{0, 1}, {2, 3}});
  PartialColoring phi(g, 3);
  BatchStats st = augment_chain_set(phi, {0, 1});
  EXPECT_EQ(st.chains_augmented, 2);
  EXPECT_EQ(phi.uncolored_count(), 0);
}

TEST(AugmentChainSet, SharedPathEndColorsOnlyOne) {
  // Both chains are single happy edges ending at vertex 2.
  Multigraph g(3, {{0, 2}, {1, 2}});
  PartialColoring phi(g, 3);
  BatchStats st = augment_chain_set(phi, {0, 1});
  EXPECT_EQ(st.chains_augmented, 1);
  EXPECT_TRUE(phi.colored(0));
  EXPECT_FALSE(phi.colored(1));
}

TEST(AugmentChainSet, SharedAlternatingComponentColorsOnlyOne) {
  // x_i y_i blank with M(x_i) = {3,4,5} and M(y_i) = {0,1,2}; the fans run
  // through x_i z_i colored 0, and z_0, z_1 are the two ends of one 3/1 path.
  // Each path therefore ends at the other chain's fan vertex.
  support::Builder b;
  std::vector<EdgeId> blank;
  std::vector<Vertex> z;
  for (int i = 0; i < 2; ++i) {
    Vertex x = b.vertex(), y = b.vertex();
    z.push_back(b.vertex());
    blank.push_back(b.edge(x, y));
    b.edge(x, z.back(), 0);
    b.pendant(x, 1);
    b.pendant(x, 2);
    for (Color c : {3, 4, 5}) b.pendant(y, c);
    b.pendant(z.back(), 4);
    b.pendant(z.back(), 5);
  }
  Vertex p = b.vertex(), q = b.vertex();
  b.edge(z[0], p, 3);
  b.edge(p, q, 1);
  b.edge(q, z[1], 3);
  Multigraph g = b.graph();
  PartialColoring phi = support::with_colors(g, 6, b.colors);
  GammaPartition parts = gamma_partition(phi, blank);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts.begin()->first, std::make_pair(1, 3));
  ShannonChain c0 = shannon_chain(phi, blank[0], g.min_end(blank[0]));
  ShannonChain c1 = shannon_chain(phi, blank[1], g.min_end(blank[1]));
  EXPECT_EQ(c0.path.v_end, z[1]);
  EXPECT_EQ(c1.path.v_end, z[0]);
  BatchStats st = augment_chain_set(phi, blank);
  EXPECT_EQ(st.chains_augmented, 1);
  EXPECT_TRUE(phi.colored(blank[0]));
  EXPECT_FALSE(phi.colored(blank[1]));
  EXPECT_TRUE(is_proper(g, phi.colors()));
}

TEST(AugmentChainSet, RandomBatchesAreDisjointAndMakeProgress) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int delta = 2 + static_cast<int>(seed % 8);
    Multigraph g = random_multigraph(300, delta, 1 + static_cast<int>(seed % delta), seed + 40);
    Rng rng(seed);
    PartialColoring phi = support::random_partial(g, shannon_bound(g.max_degree()), rng, 0.6);
    while (phi.uncolored_count() > 0) {
      GammaPartition parts = gamma_partition(phi, all_blank(phi));
      std::vector<EdgeId> batch = largest_bucket(parts)->second;
      check_batch(phi, batch);
      if (HasFatalFailure()) return;
    }
  }
}

TEST(ColorDeterministic, Matching) {
  Multigraph g(6, {{0, 1}, {2, 3}, {4, 5}});
  DeterministicResult r = color_deterministic(g);
  EXPECT_EQ(colors_used(r.coloring.colors()), 1);
  EXPECT_EQ(r.coloring.uncolored_count(), 0);
}

TEST(ColorDeterministic, FatTriangles) {
  for (int d : {2, 4, 6, 8}) {
    Multigraph g = shannon_extremal(d);
    DeterministicResult r = color_deterministic(g);
    EXPECT_EQ(r.coloring.uncolored_count(), 0);
    EXPECT_TRUE(oracle::proper(g, support::to_vector(r.coloring)));
    EXPECT_EQ(colors_used(r.coloring.colors()), 3 * d / 2);
  }
}

TEST(ColorDeterministic, BatchStatsAreConsistent) {
  Multigraph g = random_multigraph(500, 6, 3, 12);
  DeterministicResult r = color_deterministic(g, true);
  int total = 0;
  for (const BatchStats& st : r.batches) {
    EXPECT_EQ(static_cast<int>(st.bucket_sizes.size()), st.bucket_count);
    EXPECT_EQ(*std::max_element(st.bucket_sizes.begin(), st.bucket_sizes.end()), st.batch_size);
    EXPECT_EQ(st.dom_after - st.dom_before, st.chains_augmented);
    EXPECT_EQ(st.augmented.size(), static_cast<std::size_t>(st.chains_augmented));
    total += st.chains_augmented;
  }
  EXPECT_EQ(total, g.num_edges());
  EXPECT_EQ(r.iterations, static_cast<int>(r.batches.size()));
}

TEST(ColorDeterministic, LargeRandomMultigraph) {
  Multigraph g = random_multigraph(2000, 8, 4, 2000);
  DeterministicResult r = color_deterministic(g);
  EXPECT_EQ(r.coloring.uncolored_count(), 0);
  EXPECT_TRUE(oracle::proper(g, support::to_vector(r.coloring)));
  EXPECT_LE(colors_used(r.coloring.colors()), 12);
  std::vector<Color> c = support::to_vector(r.coloring);
  EXPECT_LT(*std::max_element(c.begin(), c.end()), 12);
}

#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "subdue/discovery.hpp"
#include "subdue/generator.hpp"

using namespace subdue;

namespace {

LabeledGraph fixture(const std::string& name) {
  return load_graph(std::string(SUBDUE_FIXTURE_DIR) + "/" + name);
}

DiscoveryParams exhaustive() {
  DiscoveryParams p;
  p.beam_width = 1u << 20;
  p.nbest = 1u << 20;
  return p;
}

std::string report(const std::vector<SubstructureCandidate>& found) {
  std::string out;
  for (const auto& c : found) {
    out += serialize_graph(c.definition) + "value " + std::to_string(c.value()) + " instances " +
           std::to_string(c.instances.size()) + "\n";
    for (const auto& inst : c.instances) {
      for (std::size_t v : inst.vertices) out += std::to_string(v) + ' ';
      out += '|';
      for (std::size_t e : inst.edges) out += std::to_string(e) + ' ';
      out += "cost " + std::to_string(inst.match_cost) + "\n";
    }
  }
  return out;
}

}  // namespace

TEST(Discover, TwoTriangles) {
  LabeledGraph g = fixture("triangles.graph");
  auto found = discover(g, DiscoveryParams{});
  ASSERT_FALSE(found.empty());
  const auto& top = found.front();
  EXPECT_EQ(top.definition.vertex_count(), 3u);
  EXPECT_EQ(top.definition.edge_count(), 3u);
  EXPECT_EQ(top.exact_instance_count(), 2u);
  EXPECT_LT(top.compression.compression, 1.0);
  oracle::ExhaustiveBest best = oracle::best_substructure(g);
  EXPECT_NEAR(top.combined_bits(), best.combined_bits, 1e-9);
  EXPECT_TRUE(oracle::isomorphic(top.definition, best.definition));
}

TEST(Discover, UniqueLabelsYieldNoRepeats) {
  LabeledGraph g = parse_graph("v 1 a\nv 2 b\nv 3 c\nv 4 d\nu 1 2 w\nu 2 3 x\nd 3 4 y\nd 4 1 z");
  auto found = discover(g, exhaustive());
  ASSERT_FALSE(found.empty());
  for (const auto& c : found) EXPECT_EQ(c.instances.size(), 1u);
  // The matrix encoding is not additive, so contracting a single instance can
  // still shorten the description; the oracle agrees on the minimum.
  EXPECT_NEAR(found.front().combined_bits(), oracle::best_substructure(g).combined_bits, 1e-9);
}

TEST(Discover, SingleVertexGraph) {
  LabeledGraph g = parse_graph("v 1 a");
  auto found = discover(g, DiscoveryParams{});
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].definition.vertex_count(), 1u);
  EXPECT_EQ(found[0].instances.size(), 1u);
}

TEST(Discover, EmptyGraphAndBadParams) {
  EXPECT_THROW(discover(LabeledGraph{}, DiscoveryParams{}), GraphError);
  DiscoveryParams p;
  p.beam_width = 0;
  EXPECT_THROW(discover(parse_graph("v 1 a"), p), std::invalid_argument);
  p = {};
  p.threshold = 2.0;
  EXPECT_THROW(discover(parse_graph("v 1 a"), p), std::invalid_argument);
}

TEST(Discover, NbestBoundsOutput) {
  LabeledGraph g = fixture("figure3.graph");
  DiscoveryParams p;
  p.nbest = 2;
  EXPECT_LE(discover(g, p).size(), 2u);
  auto all = discover(g, exhaustive());
  for (std::size_t i = 1; i < all.size(); ++i) {
    EXPECT_FALSE(ranks_before(all[i], all[i - 1]));
  }
}

TEST(Discover, EvalLimitStopsEarly) {
  LabeledGraph g = oracle::random_graph(42, 10, 12, 2, 2, false);
  DiscoveryParams p = exhaustive();
  p.eval_limit = 3;
  auto found = discover(g, p);
  EXPECT_LE(found.size(), 3u);
}

TEST(Discover, MatchesExhaustiveOracle) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    LabeledGraph g = oracle::random_graph(seed * 7919, 4 + seed % 6, 3 + seed % 8, 2, 2, false);
    auto found = discover(g, exhaustive());
    oracle::ExhaustiveBest best = oracle::best_substructure(g);
    ASSERT_FALSE(found.empty());
    EXPECT_NEAR(found.front().combined_bits(), best.combined_bits, 1e-9)
        << serialize_graph(g) << report({found.front()});
  }
}

TEST(Discover, MinInstancesStopsSingleInstanceGrowth) {
  LabeledGraph g = parse_graph("v 1 a\nv 2 b\nv 3 c\nv 4 d\nu 1 2 w\nu 2 3 x\nd 3 4 y\nd 4 1 z");
  DiscoveryParams p = exhaustive();
  p.min_instances = 2;
  auto found = discover(g, p);
  ASSERT_FALSE(found.empty());
  for (const auto& c : found) EXPECT_EQ(c.definition.vertex_count(), 1u);
  p.min_instances = 0;
  EXPECT_THROW(discover(g, p), std::invalid_argument);
}

TEST(Discover, PruneNeverReturnsWorseThanSeeds) {
  LabeledGraph g = fixture("triangles.graph");
  DiscoveryParams p;
  p.prune = true;
  auto found = discover(g, p);
  ASSERT_FALSE(found.empty());
  EXPECT_EQ(found.front().definition.edge_count(), 3u);
}

TEST(Discover, ThreadCountDoesNotChangeResult) {
  LabeledGraph g = oracle::random_graph(77, 10, 12, 2, 2, false);
  DiscoveryParams p;
  p.threshold = 0.2;
  std::string serial = report(discover(g, p));
  p.threads = 4;
  EXPECT_EQ(report(discover(g, p)), serial);
}

TEST(Discover, ThresholdAdmitsInexactInstances) {
  // Two squares, one with a relabeled vertex.
  LabeledGraph g = parse_graph(
      "v 1 a\nv 2 b\nv 3 a\nv 4 b\nu 1 2 e\nu 2 3 e\nu 3 4 e\nu 4 1 e\n"
      "v 5 a\nv 6 b\nv 7 a\nv 8 c\nu 5 6 e\nu 6 7 e\nu 7 8 e\nu 8 5 e\n");
  DiscoveryParams p;
  p.threshold = 0.15;
  p.beam_width = 8;
  auto found = discover(g, p);
  bool inexact = false;
  for (const auto& c : found) {
    for (const auto& inst : c.instances) {
      if (inst.match_cost > 0.0) {
        inexact = true;
        EXPECT_TRUE(within_threshold(inst.match_cost, 0.15, inst.size()));
      }
    }
  }
  EXPECT_TRUE(inexact) << report(found);
}

TEST(Expand, ChainOfThree) {
  LabeledGraph g = parse_graph("v 1 C\nv 2 C\nv 3 C\nu 1 2 b\nu 2 3 b");
  auto seeds = make_seeds(g, DiscoveryParams{});
  ASSERT_EQ(seeds.size(), 1u);
  EXPECT_EQ(seeds[0].instances.size(), 3u);
  auto grown = expand(seeds[0], g, DiscoveryParams{});
  ASSERT_EQ(grown.size(), 1u);
  EXPECT_EQ(grown[0].definition.vertex_count(), 2u);
  EXPECT_EQ(grown[0].definition.edge_count(), 1u);
  EXPECT_EQ(grown[0].instances.size(), 2u);
}

TEST(Expand, WholeGraphHasNoExpansion) {
  LabeledGraph g = parse_graph("v 1 a\nv 2 b\nu 1 2 x");
  SubstructureCandidate c;
  c.instances = {Instance{{0, 1}, {0}, {0, 1}, 0.0}};
  c.definition = instance_graph(g, c.instances[0]);
  EXPECT_TRUE(expand(c, g, DiscoveryParams{}).empty());
}

TEST(Expand, DistinctEdgeLabelsGiveDistinctExpansions) {
  LabeledGraph g = parse_graph("v 1 a\nv 2 b\nv 3 c\nd 1 2 x\nd 1 3 y");
  auto seeds = make_seeds(g, DiscoveryParams{});
  auto a = std::find_if(seeds.begin(), seeds.end(),
                        [](const auto& s) { return s.definition.vertex(0).label == "a"; });
  ASSERT_NE(a, seeds.end());
  EXPECT_EQ(expand(*a, g, DiscoveryParams{}).size(), 2u);
}

TEST(Dedupe, SameTriangleFromTwoSeeds) {
  LabeledGraph g = fixture("triangles.graph");
  auto seeds = make_seeds(g, DiscoveryParams{});
  std::vector<SubstructureCandidate> triangles;
  for (const auto& seed : seeds) {
    auto edges = expand(seed, g, DiscoveryParams{});
    for (const auto& e : edges) {
      for (const auto& paths : expand(e, g, DiscoveryParams{})) {
        for (auto& t : expand(paths, g, DiscoveryParams{})) {
          if (t.definition.edge_count() == 3 && t.definition.vertex_count() == 3) {
            triangles.push_back(t);
          }
        }
      }
    }
  }
  ASSERT_GE(triangles.size(), 2u);
  auto merged = dedupe(triangles);
  ASSERT_EQ(merged.size(), 1u);
  EXPECT_EQ(merged[0].instances.size(), 2u);
  auto again = dedupe(merged);
  ASSERT_EQ(again.size(), 1u);
  EXPECT_EQ(serialize_graph(again[0].definition), serialize_graph(merged[0].definition));
  EXPECT_EQ(again[0].instances.size(), merged[0].instances.size());
}

TEST(Dedupe, DifferentEdgeLabelsStaySeparate) {
  LabeledGraph g = parse_graph(
      "v 1 a\nv 2 a\nv 3 a\nu 1 2 e\nu 2 3 e\nu 1 3 e\n"
      "v 4 a\nv 5 a\nv 6 a\nu 4 5 f\nu 5 6 f\nu 4 6 f\n");
  std::vector<SubstructureCandidate> cs(2);
  cs[0].instances = {Instance{{0, 1, 2}, {0, 1, 2}, {0, 1, 2}, 0.0}};
  cs[1].instances = {Instance{{3, 4, 5}, {3, 4, 5}, {3, 4, 5}, 0.0}};
  for (auto& c : cs) c.definition = instance_graph(g, c.instances[0]);
  EXPECT_EQ(dedupe(cs).size(), 2u);
}

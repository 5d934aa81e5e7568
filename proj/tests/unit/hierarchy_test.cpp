#include <gtest/gtest.h>

#include <algorithm>

#include "subdue/hierarchy.hpp"
#include "ladder.hpp"

using namespace subdue;

namespace {

LabeledGraph fixture(const std::string& name) {
  return load_graph(std::string(SUBDUE_FIXTURE_DIR) + "/" + name);
}

std::size_t count_label(const LabeledGraph& g, const Label& label) {
  return static_cast<std::size_t>(std::count_if(g.vertices().begin(), g.vertices().end(),
                                                [&](const Vertex& v) { return v.label == label; }));
}

const char* kPairs =
    "v 1 a\nv 2 b\nv 3 a\nv 4 b\nv 5 a\nv 6 b\n"
    "u 1 2 in\nu 2 3 link\nu 3 4 in\nu 4 5 link\nu 5 6 in\n";

}  // namespace

TEST(Replace, PairsBecomeLinkedChain) {
  LabeledGraph g = parse_graph(kPairs);
  SubstructureCandidate s;
  s.instances = {Instance{{0, 1}, {0}, {0, 1}, 0.0}, Instance{{2, 3}, {2}, {2, 3}, 0.0},
                 Instance{{4, 5}, {4}, {4, 5}, 0.0}};
  s.definition = instance_graph(g, s.instances[0]);
  LabeledGraph out = replace_instances(g, s, "SUB_1");
  EXPECT_EQ(out.vertex_count(), 3u);
  EXPECT_EQ(count_label(out, "SUB_1"), 3u);
  ASSERT_EQ(out.edge_count(), 2u);
  for (const Edge& e : out.edges()) EXPECT_EQ(e.label, "link");
  EXPECT_TRUE(is_connected(out));
  EXPECT_EQ(out.vertex(0).id, 7);
  EXPECT_EQ(out.vertex(2).id, 9);
}

TEST(Replace, WholeGraphBecomesOneVertex) {
  LabeledGraph g = parse_graph(kPairs);
  SubstructureCandidate s;
  s.instances = {Instance{{0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4, 5}, 0.0}};
  s.definition = g;
  LabeledGraph out = replace_instances(g, s, "SUB_1");
  EXPECT_EQ(out.vertex_count(), 1u);
  EXPECT_EQ(out.edge_count(), 0u);
}

TEST(Replace, OverlappingInstancesOnlyFirst) {
  LabeledGraph g = parse_graph(kPairs);
  SubstructureCandidate s;
  s.instances = {Instance{{0, 1}, {0}, {0, 1}, 0.0}, Instance{{1, 2}, {1}, {1, 2}, 0.0}};
  s.definition = instance_graph(g, s.instances[0]);
  LabeledGraph out = replace_instances(g, s, "SUB_1");
  EXPECT_EQ(out.vertex_count(), 5u);
  EXPECT_EQ(count_label(out, "SUB_1"), 1u);
}

TEST(Replace, InexactInstancesAreNotContracted) {
  LabeledGraph g = parse_graph(kPairs);
  SubstructureCandidate s;
  s.instances = {Instance{{0, 1}, {0}, {0, 1}, 0.0}, Instance{{2, 3}, {2}, {2, 3}, 1.0}};
  s.definition = instance_graph(g, s.instances[0]);
  EXPECT_EQ(count_label(replace_instances(g, s, "SUB_1"), "SUB_1"), 1u);
}

TEST(Replace, NonInstanceEdgeBecomesSelfLoop) {
  LabeledGraph g = parse_graph("v 1 a\nv 2 b\nv 3 c\nu 1 2 e\nu 2 3 e\nu 1 3 f\nv 4 d\nu 3 4 g");
  SubstructureCandidate s;
  s.instances = {Instance{{0, 1, 2}, {0, 1}, {0, 1, 2}, 0.0}};
  s.definition = instance_graph(g, s.instances[0]);
  LabeledGraph out = replace_instances(g, s, "SUB_1");
  ASSERT_EQ(out.vertex_count(), 2u);
  ASSERT_EQ(out.edge_count(), 2u);
  EXPECT_EQ(out.edge(0).src, 0u);
  EXPECT_EQ(out.edge(0).dst, 0u);
  EXPECT_EQ(out.edge(0).label, "f");
  EXPECT_EQ(out.edge(1).label, "g");
}

TEST(Replace, LabelCollision) {
  LabeledGraph g = parse_graph("v 1 SUB_1\nv 2 SUB_1\nu 1 2 x");
  SubstructureCandidate s;
  s.instances = {Instance{{0}, {}, {0}, 0.0}};
  s.definition = instance_graph(g, s.instances[0]);
  EXPECT_THROW(replace_instances(g, s, "SUB_1"), GraphError);
  EXPECT_EQ(fresh_label(g), "SUB_2");
}

TEST(Hierarchy, OnePassEqualsDiscoverPlusReplace) {
  LabeledGraph g = fixture("triangles.graph");
  auto levels = hierarchical_discover(g, DiscoveryParams{}, 1);
  ASSERT_EQ(levels.size(), 1u);
  auto found = discover(g, DiscoveryParams{});
  EXPECT_EQ(serialize_graph(levels[0].substructure.definition),
            serialize_graph(found.front().definition));
  EXPECT_EQ(levels[0].compressed_graph, replace_instances(g, found.front(), "SUB_1"));
  EXPECT_EQ(levels[0].sub_label, "SUB_1");
  EXPECT_NEAR(levels[0].compression_so_far, found.front().compression.compression, 1e-12);
}

TEST(Hierarchy, LadderSecondPassUsesFirst) {
  LabeledGraph g = test_graphs::ladder(6);
  auto levels = hierarchical_discover(g, DiscoveryParams{}, 3);
  ASSERT_GE(levels.size(), 2u);
  EXPECT_GE(levels[0].substructure.exact_instance_count(), 2u);
  EXPECT_GE(count_label(levels[1].substructure.definition, "SUB_1"), 2u);
  for (std::size_t i = 1; i < levels.size(); ++i) {
    EXPECT_LT(levels[i].compressed_graph.size(), levels[i - 1].compressed_graph.size());
  }
}

TEST(Hierarchy, StopsAtSingleVertex) {
  LabeledGraph g = test_graphs::linked_triangles();
  auto levels = hierarchical_discover(g, DiscoveryParams{}, 5);
  ASSERT_EQ(levels.size(), 2u);
  EXPECT_EQ(levels[1].compressed_graph.vertex_count(), 1u);
}

TEST(Hierarchy, StopsWithoutRepeats) {
  LabeledGraph g = parse_graph("v 1 a\nv 2 b\nu 1 2 x");
  EXPECT_TRUE(hierarchical_discover(g, DiscoveryParams{}, 3).empty());
  EXPECT_THROW(hierarchical_discover(g, DiscoveryParams{}, 0), std::invalid_argument);
}

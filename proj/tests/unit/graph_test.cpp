#include <gtest/gtest.h>

#include <sstream>

#include "subdue/graph.hpp"

using namespace subdue;

namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const GraphError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(Parse, TwoVerticesOneEdge) {
  LabeledGraph g = parse_graph("v 1 a\nv 2 b\nu 1 2 on");
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.label_count(), 3u);
  EXPECT_FALSE(g.edge(0).directed);
}

TEST(Parse, UndefinedVertexIsRejected) {
  EXPECT_THROW(parse_graph("v 1 a\nu 1 2 on"), GraphError);
  EXPECT_EQ(error_line("v 1 a\nu 1 2 on"), 2u);
}

TEST(Parse, DuplicateIdIsRejected) {
  EXPECT_THROW(parse_graph("v 1 a\nv 1 b"), GraphError);
  EXPECT_EQ(error_line("v 1 a\nv 1 b"), 2u);
}

TEST(Parse, MalformedLinesReportLineNumber) {
  EXPECT_EQ(error_line("v 1 a\n\nx 1 2"), 3u);
  EXPECT_EQ(error_line("v 1"), 1u);
  EXPECT_EQ(error_line("v one a"), 1u);
  EXPECT_EQ(error_line("v 1 a\nv 2 b\nd 1 2"), 3u);
  EXPECT_EQ(error_line("v 1 \"open"), 1u);
}

TEST(Parse, CommentsAndBlankLines) {
  LabeledGraph g = parse_graph("# header\n\nv 1 a  # trailing\nv 2 a\nd 2 1 x\n");
  EXPECT_EQ(g.vertex_count(), 2u);
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.edge(0).directed);
  EXPECT_EQ(g.edge(0).src, 1u);
  EXPECT_EQ(g.edge(0).dst, 0u);
  EXPECT_EQ(g.label_count(), 2u);
}

TEST(Parse, UndirectedEdgesAreNormalized) {
  LabeledGraph g = parse_graph("v 5 a\nv 3 b\nu 3 5 e");
  EXPECT_EQ(g.edge(0).src, 0u);
  EXPECT_EQ(g.edge(0).dst, 1u);
}

TEST(Parse, SelfLoopsAndMultiEdges) {
  LabeledGraph g = parse_graph("v 1 a\nv 2 a\nu 1 1 s\nd 1 2 x\nd 1 2 x");
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.degree(0), 3u);
  EXPECT_EQ(g.degree(1), 2u);
}

TEST(Serialize, RoundTrip) {
  LabeledGraph g = parse_graph("v 1 a\nv 2 b\nd 1 2 on");
  std::string text = serialize_graph(g);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
  EXPECT_EQ(parse_graph(text), g);
}

TEST(Serialize, EdgelessGraph) {
  LabeledGraph g = parse_graph("v 1 a\nv 2 b\nv 3 c");
  std::string text = serialize_graph(g);
  EXPECT_EQ(text, "v 1 a\nv 2 b\nv 3 c\n");
}

TEST(Serialize, QuotedLabelPreserved) {
  LabeledGraph g = parse_graph("v 1 \"carbon atom\"\nv 2 \"say \\\"hi\\\"\"\nu 1 2 bond");
  EXPECT_EQ(g.vertex(0).label, "carbon atom");
  EXPECT_EQ(g.vertex(1).label, "say \"hi\"");
  std::string text = serialize_graph(g);
  EXPECT_NE(text.find("\"carbon atom\""), std::string::npos);
  EXPECT_EQ(parse_graph(text), g);
}

TEST(Graph, LabelTableIsSortedAndShared) {
  LabeledGraph g = parse_graph("v 1 b\nv 2 a\nd 1 2 a\nd 2 1 c");
  ASSERT_EQ(g.label_count(), 3u);
  EXPECT_EQ(g.label_table()[0], "a");
  EXPECT_EQ(g.label_table()[2], "c");
  EXPECT_TRUE(g.has_label("c"));
  EXPECT_FALSE(g.has_label("d"));
}

TEST(Graph, IndexOfUnknownIdThrows) {
  LabeledGraph g = parse_graph("v 7 a");
  EXPECT_EQ(g.index_of(7), 0u);
  EXPECT_THROW(g.index_of(8), GraphError);
}

TEST(Graph, InducedSubgraphKeepsOrderAndIds) {
  LabeledGraph g = parse_graph("v 1 a\nv 2 b\nv 3 c\nu 1 2 x\nu 2 3 y\nu 1 3 z");
  std::vector<std::size_t> vs{2, 0};
  std::vector<std::size_t> es{2};
  LabeledGraph s = induced_subgraph(g, vs, es);
  ASSERT_EQ(s.vertex_count(), 2u);
  EXPECT_EQ(s.vertex(0).id, 3);
  EXPECT_EQ(s.vertex(1).id, 1);
  ASSERT_EQ(s.edge_count(), 1u);
  EXPECT_EQ(s.edge(0).label, "z");
  EXPECT_EQ(s.edge(0).src, 0u);
  EXPECT_EQ(s.edge(0).dst, 1u);
}

TEST(Graph, Connectivity) {
  EXPECT_TRUE(is_connected(parse_graph("v 1 a")));
  EXPECT_TRUE(is_connected(parse_graph("v 1 a\nv 2 b\nd 2 1 x")));
  EXPECT_FALSE(is_connected(parse_graph("v 1 a\nv 2 b")));
}

TEST(Graph, LoadMissingFileThrows) {
  EXPECT_THROW(load_graph("/nonexistent/graph.txt"), GraphError);
}

TEST(Graph, LoadFixture) {
  LabeledGraph g = load_graph(std::string(SUBDUE_FIXTURE_DIR) + "/figure3.graph");
  EXPECT_EQ(g.vertex_count(), 6u);
  EXPECT_EQ(g.edge_count(), 5u);
  EXPECT_EQ(g.label_count(), 8u);
}

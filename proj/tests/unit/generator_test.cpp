#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "subdue/generator.hpp"
#include "subdue/match.hpp"

using namespace subdue;

namespace {

LabeledGraph square() {
  return parse_graph("v 1 A\nv 2 B\nv 3 A\nv 4 C\nu 1 2 x\nd 2 3 y\nu 3 4 x\nd 4 1 z");
}

// Host subgraph spanned by an instance's vertices, with every edge among them.
LabeledGraph spanned(const LabeledGraph& g, const std::vector<VertexId>& ids) {
  std::vector<std::size_t> vs;
  for (VertexId id : ids) vs.push_back(g.index_of(id));
  std::set<std::size_t> inside(vs.begin(), vs.end());
  std::vector<std::size_t> es;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (inside.contains(g.edge(e).src) && inside.contains(g.edge(e).dst)) es.push_back(e);
  }
  return induced_subgraph(g, vs, es);
}

std::size_t leaving(const LabeledGraph& g, const std::vector<VertexId>& ids) {
  std::set<std::size_t> inside;
  for (VertexId id : ids) inside.insert(g.index_of(id));
  std::size_t n = 0;
  for (const Edge& e : g.edges()) n += inside.contains(e.src) != inside.contains(e.dst) ? 1 : 0;
  return n;
}

}  // namespace

TEST(Rng, Deterministic) {
  Rng a(5);
  Rng b(5);
  for (int i = 0; i < 100; ++i) ASSERT_EQ(a.next(), b.next());
  Rng c(6);
  for (int i = 0; i < 1000; ++i) {
    ASSERT_LT(c.index(7), 7u);
    double r = c.real();
    ASSERT_GE(r, 0.0);
    ASSERT_LT(r, 1.0);
  }
  EXPECT_THROW(c.index(0), std::invalid_argument);
}

TEST(Generate, SizeIsFactorTimesSub) {
  GenParams p;
  p.target_sub = square();
  p.seed = 1;
  GeneratedGraph out = generate(p);
  EXPECT_EQ(out.graph.size(), 120u);
  EXPECT_EQ(out.truth.graph_size, 120u);
  EXPECT_EQ(out.truth.target_size, 8u);
}

TEST(Generate, ExactInstancesWithoutDistortion) {
  GenParams p;
  p.target_sub = square();
  p.seed = 2;
  GeneratedGraph out = generate(p);
  ASSERT_FALSE(out.truth.instance_locations.empty());
  for (const auto& ids : out.truth.instance_locations) {
    LabeledGraph inst = spanned(out.graph, ids);
    EXPECT_EQ(match_cost(p.target_sub, inst).cost, 0.0);
    EXPECT_TRUE(is_instance_match(p.target_sub, inst, 0.0).accepted);
    EXPECT_TRUE(oracle::isomorphic(p.target_sub, inst));
  }
}

TEST(Generate, SameSeedSameGraph) {
  GenParams p;
  p.target_sub = square();
  p.seed = 3;
  p.distortions = 2;
  EXPECT_EQ(serialize_graph(generate(p).graph), serialize_graph(generate(p).graph));
  GenParams q = p;
  q.seed = 4;
  EXPECT_NE(serialize_graph(generate(p).graph), serialize_graph(generate(q).graph));
}

TEST(Generate, PropertiesOverRandomParameters) {
  auto subs = default_substructures();
  Rng rng(31337);
  for (int trial = 0; trial < 60; ++trial) {
    GenParams p;
    p.target_sub = subs[rng.index(subs.size())].second;
    p.size_factor = 10 + rng.index(11);
    p.label_factor = 1 + rng.index(2);
    p.external_conns = 1 + rng.index(2);
    p.coverage_frac = rng.chance(0.5) ? 0.6 : 0.8;
    p.distortions = rng.index(3);
    p.seed = rng.next();
    GeneratedGraph out = generate(p);
    const double sub_size = double(p.target_sub.size());
    const double total = double(p.size_factor) * sub_size;
    ASSERT_LE(std::abs(double(out.graph.size()) - total), 1.0);
    ASSERT_LE(std::abs(double(out.truth.covered_size) - p.coverage_frac * total), sub_size);
    ASSERT_EQ(out.truth.label_pool.size(), p.label_factor * p.target_sub.label_count());
    std::size_t covered = 0;
    for (std::size_t k = 0; k < out.truth.instance_locations.size(); ++k) {
      const auto& ids = out.truth.instance_locations[k];
      ASSERT_EQ(ids.size(), p.target_sub.vertex_count());
      ASSERT_EQ(leaving(out.graph, ids), p.external_conns);
      ASSERT_EQ(out.truth.distortion_log[k].size(), p.distortions);
      LabeledGraph inst = spanned(out.graph, ids);
      covered += inst.size();
      ASSERT_TRUE(is_connected(inst));
      if (p.distortions == 0) ASSERT_TRUE(oracle::isomorphic(p.target_sub, inst));
    }
    ASSERT_EQ(covered, out.truth.covered_size);
    std::set<Label> pool(out.truth.label_pool.begin(), out.truth.label_pool.end());
    for (const Label& l : out.graph.label_table()) ASSERT_TRUE(pool.contains(l)) << l;
  }
}

TEST(Generate, InvalidParameters) {
  GenParams p;
  p.target_sub = square();
  p.coverage_frac = 0.0;
  EXPECT_THROW(generate(p), std::invalid_argument);
  p.coverage_frac = 0.6;
  p.size_factor = 1;
  EXPECT_THROW(generate(p), std::invalid_argument);
  p.size_factor = 2;
  p.coverage_frac = 0.05;
  EXPECT_THROW(generate(p), std::invalid_argument);
  p.target_sub = parse_graph("v 1 a\nv 2 b");
  p.coverage_frac = 0.6;
  EXPECT_THROW(generate(p), std::invalid_argument);
}

TEST(Suite, Counts) {
  auto subs = default_substructures();
  ASSERT_EQ(subs.size(), 4u);
  std::vector<std::string> names;
  for (const auto& [name, g] : subs) {
    names.push_back(name);
    EXPECT_TRUE(is_connected(g));
    EXPECT_EQ(name, "s" + std::to_string(g.vertex_count()) + "e" + std::to_string(g.edge_count()));
  }
  auto suite = generate_suite(subs, 9);
  EXPECT_EQ(suite.size(), 96u);
  std::set<std::string> unique;
  for (const auto& e : suite) unique.insert(e.name);
  EXPECT_EQ(unique.size(), 96u);
  EXPECT_EQ(generate_suite({subs[0]}, 9).size(), 24u);
}

TEST(Suite, Reproducible) {
  auto subs = default_substructures();
  auto a = generate_suite({subs[1]}, 11);
  auto b = generate_suite({subs[1]}, 11);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(serialize_graph(a[i].generated.graph), serialize_graph(b[i].generated.graph));
  }
}

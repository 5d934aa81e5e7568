#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "subdue/graph.hpp"

namespace subdue {

/// Part of the host graph matched to a substructure definition.
struct Instance {
  std::vector<std::size_t> vertices;  // host vertex indices, ascending
  std::vector<std::size_t> edges;     // host edge indices, ascending
  /// Definition vertex -> host vertex (kDeleted when unmatched).
  std::vector<std::size_t> vertex_map;
  double match_cost = 0.0;

  std::size_t size() const noexcept { return vertices.size() + edges.size(); }
  bool exact() const noexcept { return match_cost == 0.0; }
  bool same_structure(const Instance& other) const {
    return vertices == other.vertices && edges == other.edges;
  }
};

/// Canonical instance order: by vertex set, then edge set.
bool instance_less(const Instance& a, const Instance& b);

/// The instance as a standalone graph, vertices in ascending host order.
LabeledGraph instance_graph(const LabeledGraph& g, const Instance& inst);

/// Edges with exactly one endpoint inside the instance.
std::size_t external_connections(const LabeledGraph& g, const Instance& inst);

bool shares_vertex(const Instance& a, const Instance& b);

/// Greedy pairwise vertex-disjoint subset (indices into `instances`), taken in
/// list order; with `exact_only` only zero-cost instances are eligible.
std::vector<std::size_t> disjoint_subset(std::span<const Instance> instances, bool exact_only);

}  // namespace subdue

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "subdue/discovery.hpp"
#include "subdue/graph.hpp"
#include "subdue/instance.hpp"
#include "subdue/substructure.hpp"

namespace subdue {

struct Contraction {
  LabeledGraph graph;
  /// Indices (into the instance list) of the instances that were contracted.
  std::vector<std::size_t> replaced;
};

/// Contracts a greedy vertex-disjoint subset of the exact instances, each to
/// one new vertex labeled `label`. The new vertex sits where the instance's
/// lowest-indexed vertex was and takes a fresh id. The instance's own edges
/// disappear; every other edge is re-attached, so an edge joining two vertices
/// of one instance without belonging to it becomes a self-loop.
Contraction contract_instances(const LabeledGraph& g, std::span<const Instance> instances,
                               const Label& label);

/// Throws GraphError when `label` already occurs in g.
LabeledGraph replace_instances(const LabeledGraph& g, const SubstructureCandidate& s,
                               const Label& label);

/// First "SUB_<n>" (n >= 1) not present in g.
Label fresh_label(const LabeledGraph& g);

struct HierarchyLevel {
  std::size_t pass_index = 0;
  Label sub_label;
  SubstructureCandidate substructure;
  LabeledGraph compressed_graph;
  std::size_t replaced = 0;
  double dl_input = 0.0;       // DL of the graph this pass started from
  double dl_compressed = 0.0;  // DL of compressed_graph
  /// (sum of I(S) over passes so far + DL(compressed_graph)) / DL(original).
  double compression_so_far = 0.0;
};

/// Repeated discover-and-contract. Pass k labels its substructure "SUB_k".
std::vector<HierarchyLevel> hierarchical_discover(const LabeledGraph& g,
                                                  const DiscoveryParams& params,
                                                  std::size_t passes);

}  // namespace subdue

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "subdue/graph.hpp"

namespace subdue {

/// Cost of each elementary graph transformation. All costs must be >= 0.
struct DistortionCosts {
  double vertex_delete = 1.0;
  double vertex_insert = 1.0;
  double vertex_substitute = 1.0;
  double edge_delete = 1.0;
  double edge_insert = 1.0;
  double edge_substitute = 1.0;

  void validate() const;
};

/// Search-node limit for the branch-and-bound matcher. The limit scales with
/// the product of the two vertex counts unless `absolute` is set.
struct MatchBudget {
  double factor = 10.0;
  std::optional<std::size_t> absolute;

  std::size_t node_limit(std::size_t n1, std::size_t n2) const;

  static MatchBudget unlimited();
  static MatchBudget nodes(std::size_t limit);
};

/// Marks a vertex of g1 deleted (mapped to lambda).
inline constexpr std::size_t kDeleted = static_cast<std::size_t>(-1);

struct MatchResult {
  /// mapping[i] is the g2 vertex assigned to g1 vertex i, or kDeleted.
  std::vector<std::size_t> mapping;
  double cost = 0.0;
  /// False when the node limit forced the hill-climbing fallback.
  bool optimal = true;
  std::size_t nodes_expanded = 0;
};

/// Least-cost mapping of g1 onto g2. g1's vertices are assigned from the most
/// to the least connected; ties between equal-cost states go to the deeper
/// state, then to the lexicographically smallest assignment.
MatchResult match_cost(const LabeledGraph& g1, const LabeledGraph& g2,
                       const DistortionCosts& costs = {}, const MatchBudget& budget = {});

/// Like match_cost, but states costing more than `bound` are discarded. Returns
/// nullopt when no mapping of cost <= bound was found.
std::optional<MatchResult> match_within(const LabeledGraph& g1, const LabeledGraph& g2,
                                        const DistortionCosts& costs, const MatchBudget& budget,
                                        double bound);

/// Total transformation cost of a complete mapping.
double mapping_cost(const LabeledGraph& g1, const LabeledGraph& g2,
                    const std::vector<std::size_t>& mapping, const DistortionCosts& costs);

struct InstanceMatch {
  bool accepted = false;
  /// Cost of the accepted mapping; infinity when rejected.
  double cost = 0.0;
  std::vector<std::size_t> mapping;
};

/// The acceptance rule: cost <= threshold * size.
bool within_threshold(double cost, double threshold, std::size_t size);

/// Accepts `candidate` when matchcost(sub, candidate) <= threshold * size(candidate).
InstanceMatch is_instance_match(const LabeledGraph& sub, const LabeledGraph& candidate,
                                double threshold, const DistortionCosts& costs = {},
                                const MatchBudget& budget = {});

/// Exact labeled isomorphism; equivalent to a zero-cost match under unit costs.
/// Returns the vertex bijection a -> b.
std::optional<std::vector<std::size_t>> find_isomorphism(const LabeledGraph& a,
                                                         const LabeledGraph& b);

/// Equal for isomorphic graphs; used to bucket graphs before the exact test.
std::uint64_t shape_fingerprint(const LabeledGraph& g);

}  // namespace subdue

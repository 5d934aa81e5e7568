#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "subdue/graph.hpp"
#include "subdue/match.hpp"
#include "subdue/rules.hpp"
#include "subdue/substructure.hpp"

namespace subdue {

struct DiscoveryParams {
  std::size_t beam_width = 4;
  /// Fraction of an instance's size that its match cost may reach.
  double threshold = 0.0;
  /// Maximum number of candidates scored; 0 means unbounded.
  std::size_t eval_limit = 0;
  /// Drop expansions whose I(S) + I(G|S) exceeds their parent's.
  bool prune = false;
  std::size_t nbest = 3;
  /// Candidates with fewer instances are still ranked but never expanded.
  std::size_t min_instances = 1;
  DistortionCosts costs;
  MatchBudget budget;
  RuleWeights weights;
  LabelPreferences label_prefs;
  /// Labels produced by earlier hierarchy passes (for the hierarchy rule).
  std::set<Label> sub_labels;
  std::optional<double> isolation_cap;
  /// Worker threads used to score candidates; output does not depend on it.
  std::size_t threads = 1;

  void validate() const;
};

/// One single-vertex candidate per distinct vertex label, unscored.
std::vector<SubstructureCandidate> make_seeds(const LabeledGraph& g, const DiscoveryParams& params);

/// Grows every instance of `c` by one incident edge not yet covered, groups the
/// grown instances by exact shape and, for thresholds above zero, lets each
/// group absorb instances of the other groups that match its definition.
/// Returned candidates are unscored.
std::vector<SubstructureCandidate> expand(const SubstructureCandidate& c, const LabeledGraph& g,
                                          const DiscoveryParams& params);

/// Merges candidates with isomorphic definitions, keeping the first
/// definition and dropping structurally repeated instances.
std::vector<SubstructureCandidate> dedupe(std::vector<SubstructureCandidate> candidates);

/// Fills in I(S), I(G|S), the compression report and the rule report.
void score_candidate(SubstructureCandidate& c, const LabeledGraph& g, const DiscoveryParams& params,
                     double dl_original);

/// Total ranking order: higher value first, then smaller I(S), then the
/// serialized definition.
bool ranks_before(const SubstructureCandidate& a, const SubstructureCandidate& b);

/// Beam search for the best-valued substructures; returns at most
/// params.nbest candidates, best first.
std::vector<SubstructureCandidate> discover(const LabeledGraph& g, const DiscoveryParams& params);

}  // namespace subdue

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>

#include "subdue/graph.hpp"
#include "subdue/instance.hpp"

namespace subdue {

/// Exponents applied to each background rule. Positive favors, zero disables,
/// negative disfavors.
struct RuleWeights {
  double compactness = 0.0;
  double connectivity = 0.0;
  double coverage = 0.0;
  double label_preference = 0.0;
  /// Bias toward definitions built from earlier passes' substructure labels.
  double hierarchy = 0.0;
};

using LabelPreferences = std::map<Label, double>;

struct RuleReport {
  double mdl_score = 0.0;
  double compactness = 1.0;
  double connectivity = 1.0;
  double coverage = 1.0;
  double label_preference = 1.0;
  double hierarchy = 1.0;
  double value = 0.0;
};

/// 1 - matchcost / size(i), clamped to [0, 1]; 0 when the cost exceeds the
/// size of the larger of the instance and the definition.
double instance_weight(const Instance& inst, const LabeledGraph& definition);

double compactness(std::span<const Instance> instances, const LabeledGraph& definition);

/// When the weighted mean of external connections is 0 its inverse is replaced
/// by `isolation_cap`, which defaults to the host graph's vertex count.
double connectivity(std::span<const Instance> instances, const LabeledGraph& definition,
                    const LabeledGraph& g, std::optional<double> isolation_cap = std::nullopt);

/// Instances are visited in list order; structure already covered by an
/// earlier instance does not count again.
double coverage(std::span<const Instance> instances, const LabeledGraph& definition,
                const LabeledGraph& g);

/// Geometric mean of the preference of each definition vertex label
/// (unlisted labels count as 1).
double label_preference(const LabeledGraph& definition, const LabelPreferences& prefs);

/// 1 + number of definition vertices whose label is in `sub_labels`.
double hierarchy_rule(const LabeledGraph& definition, const std::set<Label>& sub_labels);

/// value = mdl_score * product of rule^exponent over the rules in `report`.
/// Throws std::domain_error for a zero rule value under a negative exponent.
RuleReport combine_rules(RuleReport report, const RuleWeights& weights);

struct RuleContext {
  RuleWeights weights;
  LabelPreferences label_prefs;
  std::set<Label> sub_labels;
  std::optional<double> isolation_cap;
};

RuleReport substructure_value(double mdl_score, const LabeledGraph& definition,
                              std::span<const Instance> instances, const LabeledGraph& g,
                              const RuleContext& context);

}  // namespace subdue

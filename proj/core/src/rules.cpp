#include "subdue/rules.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace subdue {

double instance_weight(const Instance& inst, const LabeledGraph& definition) {
  const double size = static_cast<double>(inst.size());
  if (size <= 0.0) throw std::invalid_argument("instance has no structure");
  const double larger = std::max(size, static_cast<double>(definition.size()));
  if (inst.match_cost > larger) return 0.0;
  return std::clamp(1.0 - inst.match_cost / size, 0.0, 1.0);
}

double compactness(std::span<const Instance> instances, const LabeledGraph& definition) {
  if (instances.empty()) throw std::invalid_argument("compactness needs at least one instance");
  double sum = 0.0;
  for (const Instance& inst : instances) {
    sum += instance_weight(inst, definition) * static_cast<double>(inst.edges.size()) /
           static_cast<double>(inst.vertices.size());
  }
  return 1.0 + sum / static_cast<double>(instances.size());
}

double connectivity(std::span<const Instance> instances, const LabeledGraph& definition,
                    const LabeledGraph& g, std::optional<double> isolation_cap) {
  if (instances.empty()) throw std::invalid_argument("connectivity needs at least one instance");
  double sum = 0.0;
  for (const Instance& inst : instances) {
    sum += instance_weight(inst, definition) * static_cast<double>(external_connections(g, inst));
  }
  const double mean = sum / static_cast<double>(instances.size());
  if (mean <= 0.0) return 1.0 + isolation_cap.value_or(static_cast<double>(g.vertex_count()));
  return 1.0 + 1.0 / mean;
}

double coverage(std::span<const Instance> instances, const LabeledGraph& definition,
                const LabeledGraph& g) {
  std::vector<char> seen_vertex(g.vertex_count(), 0);
  std::vector<char> seen_edge(g.edge_count(), 0);
  double sum = 0.0;
  for (const Instance& inst : instances) {
    std::size_t fresh = 0;
    for (std::size_t v : inst.vertices) {
      if (!seen_vertex[v]) {
        seen_vertex[v] = 1;
        ++fresh;
      }
    }
    for (std::size_t e : inst.edges) {
      if (!seen_edge[e]) {
        seen_edge[e] = 1;
        ++fresh;
      }
    }
    sum += instance_weight(inst, definition) * static_cast<double>(fresh);
  }
  return 1.0 + sum / static_cast<double>(g.size());
}

double label_preference(const LabeledGraph& definition, const LabelPreferences& prefs) {
  if (definition.empty() || prefs.empty()) return 1.0;
  double log_sum = 0.0;
  for (const Vertex& v : definition.vertices()) {
    auto it = prefs.find(v.label);
    double p = it == prefs.end() ? 1.0 : it->second;
    if (p <= 0.0) return 0.0;
    log_sum += std::log(p);
  }
  return std::exp(log_sum / static_cast<double>(definition.vertex_count()));
}

double hierarchy_rule(const LabeledGraph& definition, const std::set<Label>& sub_labels) {
  double count = 0.0;
  for (const Vertex& v : definition.vertices()) {
    if (sub_labels.contains(v.label)) count += 1.0;
  }
  return 1.0 + count;
}

RuleReport combine_rules(RuleReport report, const RuleWeights& weights) {
  auto factor = [](double rule, double exponent) {
    if (exponent == 0.0) return 1.0;
    if (rule == 0.0 && exponent < 0.0) {
      throw std::domain_error("rule value 0 cannot take a negative exponent");
    }
    return std::pow(rule, exponent);
  };
  report.value = report.mdl_score * factor(report.compactness, weights.compactness) *
                 factor(report.connectivity, weights.connectivity) *
                 factor(report.coverage, weights.coverage) *
                 factor(report.label_preference, weights.label_preference) *
                 factor(report.hierarchy, weights.hierarchy);
  return report;
}

RuleReport substructure_value(double mdl_score, const LabeledGraph& definition,
                              std::span<const Instance> instances, const LabeledGraph& g,
                              const RuleContext& context) {
  RuleReport report;
  report.mdl_score = mdl_score;
  report.compactness = compactness(instances, definition);
  report.connectivity = connectivity(instances, definition, g, context.isolation_cap);
  report.coverage = coverage(instances, definition, g);
  report.label_preference = label_preference(definition, context.label_prefs);
  report.hierarchy = hierarchy_rule(definition, context.sub_labels);
  return combine_rules(report, context.weights);
}

}  // namespace subdue

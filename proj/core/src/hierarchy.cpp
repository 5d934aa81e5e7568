#include "subdue/hierarchy.hpp"

#include <algorithm>
#include <limits>

namespace subdue {

Label fresh_label(const LabeledGraph& g) {
  for (std::size_t n = 1;; ++n) {
    Label candidate = "SUB_" + std::to_string(n);
    if (!g.has_label(candidate)) return candidate;
  }
}

Contraction contract_instances(const LabeledGraph& g, std::span<const Instance> instances,
                               const Label& label) {
  Contraction out;
  out.replaced = disjoint_subset(instances, /*exact_only=*/true);

  constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> owner(g.vertex_count(), kFree);
  std::vector<char> absorbed(g.edge_count(), 0);
  for (std::size_t k = 0; k < out.replaced.size(); ++k) {
    const Instance& inst = instances[out.replaced[k]];
    for (std::size_t v : inst.vertices) owner[v] = k;
    for (std::size_t e : inst.edges) absorbed[e] = 1;
  }

  VertexId next_id = std::numeric_limits<VertexId>::min();
  for (const Vertex& v : g.vertices()) next_id = std::max(next_id, v.id);
  ++next_id;

  GraphBuilder builder;
  std::vector<std::size_t> new_index(g.vertex_count(), kFree);
  std::vector<std::size_t> instance_vertex(out.replaced.size(), kFree);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const std::size_t k = owner[v];
    if (k == kFree) {
      new_index[v] = builder.add_vertex(g.vertex(v).id, g.vertex(v).label);
      continue;
    }
    if (instance_vertex[k] == kFree) {
      instance_vertex[k] = builder.add_vertex(next_id + static_cast<VertexId>(k), label);
    }
    new_index[v] = instance_vertex[k];
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (absorbed[i]) continue;
    const Edge& e = g.edge(i);
    builder.add_edge_by_index(new_index[e.src], new_index[e.dst], e.label, e.directed);
  }
  out.graph = std::move(builder).build();
  return out;
}

LabeledGraph replace_instances(const LabeledGraph& g, const SubstructureCandidate& s,
                               const Label& label) {
  if (g.has_label(label)) {
    throw GraphError("substructure label '" + label + "' already occurs in the graph");
  }
  return contract_instances(g, s.instances, label).graph;
}

std::vector<HierarchyLevel> hierarchical_discover(const LabeledGraph& g,
                                                  const DiscoveryParams& params,
                                                  std::size_t passes) {
  if (passes == 0) throw std::invalid_argument("passes must be at least 1");
  std::vector<HierarchyLevel> levels;
  const double dl_original = description_length(g).total;
  double definitions_bits = 0.0;
  LabeledGraph current = g;
  DiscoveryParams pass_params = params;

  for (std::size_t pass = 1; pass <= passes; ++pass) {
    if (current.vertex_count() <= 1) break;
    std::vector<SubstructureCandidate> found = discover(current, pass_params);
    bool repeated = std::any_of(found.begin(), found.end(), [](const SubstructureCandidate& c) {
      return c.exact_instance_count() >= 2;
    });
    if (found.empty() || !repeated) break;

    HierarchyLevel level;
    level.pass_index = pass;
    level.sub_label = "SUB_" + std::to_string(pass);
    level.substructure = std::move(found.front());
    level.dl_input = description_length(current).total;
    if (current.has_label(level.sub_label)) {
      throw GraphError("substructure label '" + level.sub_label + "' already occurs in the graph");
    }
    Contraction contraction =
        contract_instances(current, level.substructure.instances, level.sub_label);
    level.replaced = contraction.replaced.size();
    level.compressed_graph = std::move(contraction.graph);
    level.dl_compressed = description_length(level.compressed_graph).total;
    definitions_bits += level.substructure.compression.dl_substructure;
    level.compression_so_far = (definitions_bits + level.dl_compressed) / dl_original;

    current = level.compressed_graph;
    pass_params.sub_labels.insert(level.sub_label);
    levels.push_back(std::move(level));
  }
  return levels;
}

}  // namespace subdue

#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace subdue::cli {

namespace {

void write(const Json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::number_float: {
      double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      if (std::fabs(v) < 5e-7) v = 0.0;  // no "-0.000000"
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.6f", v);
      out += buf;
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool flat = std::none_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); });
      out += '[';
      bool first = true;
      for (const Json& x : j) {
        if (!first) out += flat ? ", " : ",";
        if (!flat) out += '\n' + inner;
        write(x, out, indent + 1);
        first = false;
      }
      if (!flat) out += '\n' + pad;
      out += ']';
      return;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        out += '\n' + inner + Json(it.key()).dump() + ": ";
        write(it.value(), out, indent + 1);
        first = false;
      }
      out += '\n' + pad + '}';
      return;
    }
    default:
      out += j.dump();
  }
}

Json edge_json(const LabeledGraph& g, const Edge& e) {
  return Json{{"src", g.vertex(e.src).id},
              {"dst", g.vertex(e.dst).id},
              {"label", e.label},
              {"directed", e.directed}};
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  write(j, out, 0);
  out += '\n';
  return out;
}

Json to_json(const EncodingBreakdown& b) {
  return Json{{"vbits", b.vbits}, {"rbits", b.rbits}, {"ebits", b.ebits}, {"total", b.total}};
}

Json to_json(const CompressionReport& r) {
  return Json{{"dl_original", r.dl_original},
              {"dl_substructure", r.dl_substructure},
              {"dl_compressed", r.dl_compressed},
              {"compression", r.compression}};
}

Json to_json(const RuleReport& r) {
  return Json{{"mdl_score", r.mdl_score},
              {"compactness", r.compactness},
              {"connectivity", r.connectivity},
              {"coverage", r.coverage},
              {"label_preference", r.label_preference},
              {"hierarchy", r.hierarchy},
              {"value", r.value}};
}

Json graph_json(const LabeledGraph& g) {
  Json vertices = Json::array();
  for (const Vertex& v : g.vertices()) vertices.push_back(Json{{"id", v.id}, {"label", v.label}});
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(edge_json(g, e));
  return Json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

Json graph_summary(const LabeledGraph& g) {
  Json j{{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"labels", g.label_count()}};
  j["dl"] = g.empty() ? Json(nullptr) : to_json(description_length(g));
  return j;
}

Json candidate_json(const SubstructureCandidate& c, const LabeledGraph& host, std::size_t rank) {
  Json instances = Json::array();
  for (const Instance& inst : c.instances) {
    Json mapping = Json::array();
    for (std::size_t d = 0; d < inst.vertex_map.size(); ++d) {
      std::size_t h = inst.vertex_map[d];
      mapping.push_back(Json::array({c.definition.vertex(d).id,
                                     h == kDeleted ? Json(nullptr) : Json(host.vertex(h).id)}));
    }
    Json vertices = Json::array();
    for (std::size_t v : inst.vertices) vertices.push_back(host.vertex(v).id);
    Json edges = Json::array();
    for (std::size_t e : inst.edges) edges.push_back(edge_json(host, host.edge(e)));
    instances.push_back(Json{{"cost", inst.match_cost},
                             {"mapping", std::move(mapping)},
                             {"vertices", std::move(vertices)},
                             {"edges", std::move(edges)}});
  }
  return Json{{"rank", rank},
              {"definition", graph_json(c.definition)},
              {"definition_bits", to_json(c.definition_bits)},
              {"compressed_bits", to_json(c.compressed_bits)},
              {"compression", to_json(c.compression)},
              {"rules", to_json(c.rules)},
              {"instance_count", c.instances.size()},
              {"exact_instances", c.exact_instance_count()},
              {"replaced", c.replaced},
              {"instances", std::move(instances)}};
}

Json level_json(const HierarchyLevel& level, const LabeledGraph& input) {
  return Json{{"pass", level.pass_index},
              {"sub_label", level.sub_label},
              {"substructure", candidate_json(level.substructure, input, 1)},
              {"replaced", level.replaced},
              {"dl_input", level.dl_input},
              {"dl_compressed", level.dl_compressed},
              {"compressed_graph", graph_summary(level.compressed_graph)},
              {"compression_so_far", level.compression_so_far}};
}

Json match_json(const MatchResult& r, const LabeledGraph& g1, const LabeledGraph& g2) {
  Json mapping = Json::array();
  for (std::size_t i = 0; i < r.mapping.size(); ++i) {
    std::size_t y = r.mapping[i];
    mapping.push_back(
        Json::array({g1.vertex(i).id, y == kDeleted ? Json(nullptr) : Json(g2.vertex(y).id)}));
  }
  return Json{{"cost", r.cost},
              {"mapping", std::move(mapping)},
              {"optimal", r.optimal},
              {"nodes_expanded", r.nodes_expanded}};
}

Json params_json(const DiscoveryParams& p) {
  Json prefs = Json::object();
  for (const auto& [label, value] : p.label_prefs) prefs[label] = value;
  Json budget = Json::object();
  if (p.budget.absolute) {
    budget["node_limit"] = *p.budget.absolute;
  } else {
    budget["node_factor"] = p.budget.factor;
  }
  return Json{{"beam", p.beam_width},
              {"threshold", p.threshold},
              {"limit", p.eval_limit},
              {"prune", p.prune},
              {"nbest", p.nbest},
              {"min_instances", p.min_instances},
              {"costs",
               Json{{"vertex_delete", p.costs.vertex_delete},
                    {"vertex_insert", p.costs.vertex_insert},
                    {"vertex_substitute", p.costs.vertex_substitute},
                    {"edge_delete", p.costs.edge_delete},
                    {"edge_insert", p.costs.edge_insert},
                    {"edge_substitute", p.costs.edge_substitute}}},
              {"budget", std::move(budget)},
              {"weights",
               Json{{"compactness", p.weights.compactness},
                    {"connectivity", p.weights.connectivity},
                    {"coverage", p.weights.coverage},
                    {"label_preference", p.weights.label_preference},
                    {"hierarchy", p.weights.hierarchy}}},
              {"label_prefs", std::move(prefs)},
              {"isolation_cap", p.isolation_cap ? Json(*p.isolation_cap) : Json(nullptr)}};
}

Json sweep_json(const SweepTable& t, double dl_original) {
  Json rows = Json::array();
  for (const SweepRow& r : t.rows) {
    if (!r.found) {
      rows.push_back(Json{{"threshold", r.threshold}, {"found", false}});
      continue;
    }
    rows.push_back(Json{{"threshold", r.threshold},
                        {"found", true},
                        {"dl_original", r.report.dl_original},
                        {"dl_substructure", r.report.dl_substructure},
                        {"dl_compressed", r.report.dl_compressed},
                        {"compressed_total", r.report.dl_substructure + r.report.dl_compressed},
                        {"compression", r.report.compression},
                        {"definition_vertices", r.definition_vertices},
                        {"definition_edges", r.definition_edges},
                        {"instances", r.instances},
                        {"replaced", r.replaced}});
  }
  const SweepRow& best = t.rows[t.optimal];
  Json optimal{{"threshold", best.threshold}};
  optimal["compression"] = best.found ? Json(best.report.compression) : Json(nullptr);
  return Json{{"dl_original", dl_original}, {"rows", std::move(rows)}, {"optimal", optimal}};
}

Json truth_json(const std::string& name, const GenParams& p, const GroundTruth& t) {
  Json instances = Json::array();
  for (std::size_t k = 0; k < t.instance_locations.size(); ++k) {
    instances.push_back(
        Json{{"vertices", t.instance_locations[k]}, {"distortions", t.distortion_log[k]}});
  }
  return Json{{"name", name},
              {"params",
               Json{{"size_factor", p.size_factor},
                    {"label_factor", p.label_factor},
                    {"external_conns", p.external_conns},
                    {"coverage_frac", p.coverage_frac},
                    {"distortions", p.distortions},
                    {"seed", p.seed}}},
              {"target_sub", graph_json(p.target_sub)},
              {"label_pool", t.label_pool},
              {"target_size", t.target_size},
              {"graph_size", t.graph_size},
              {"covered_size", t.covered_size},
              {"instances", std::move(instances)}};
}

}  // namespace subdue::cli

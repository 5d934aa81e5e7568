#include "subdue/discovery.hpp"

#include <algorithm>
#include <exception>
#include <future>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "subdue/hierarchy.hpp"

namespace subdue {

namespace {

Instance exact_instance(std::vector<std::size_t> vertices, std::vector<std::size_t> edges,
                        std::vector<std::size_t> vertex_map) {
  Instance inst;
  inst.vertices = std::move(vertices);
  inst.edges = std::move(edges);
  inst.vertex_map = std::move(vertex_map);
  inst.match_cost = 0.0;
  return inst;
}

void sort_instances(std::vector<Instance>& instances) {
  std::sort(instances.begin(), instances.end(), instance_less);
}

bool contains_structure(const std::vector<Instance>& instances, const Instance& inst) {
  return std::any_of(instances.begin(), instances.end(),
                     [&](const Instance& other) { return other.same_structure(inst); });
}

// Groups instances (processed in the given order) into candidates by exact
// shape. Each group's definition is the subgraph of its first instance.
std::vector<SubstructureCandidate> group_by_shape(const LabeledGraph& g,
                                                  std::vector<Instance> grown) {
  std::vector<SubstructureCandidate> groups;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  for (Instance& inst : grown) {
    LabeledGraph shape = instance_graph(g, inst);
    std::uint64_t sig = shape_fingerprint(shape);
    auto& bucket = buckets[sig];
    bool placed = false;
    for (std::size_t idx : bucket) {
      auto iso = find_isomorphism(groups[idx].definition, shape);
      if (!iso) continue;
      std::vector<std::size_t> map(iso->size());
      for (std::size_t k = 0; k < iso->size(); ++k) map[k] = inst.vertices[(*iso)[k]];
      inst.vertex_map = std::move(map);
      inst.match_cost = 0.0;
      groups[idx].instances.push_back(std::move(inst));
      placed = true;
      break;
    }
    if (placed) continue;
    SubstructureCandidate c;
    c.definition = std::move(shape);
    inst.vertex_map = inst.vertices;
    inst.match_cost = 0.0;
    c.instances.push_back(std::move(inst));
    bucket.push_back(groups.size());
    groups.push_back(std::move(c));
  }
  return groups;
}

// Each group takes in the other groups' exact instances that match its
// definition within the threshold.
void absorb_across_groups(std::vector<SubstructureCandidate>& groups, const LabeledGraph& g,
                          const DiscoveryParams& params) {
  if (params.threshold <= 0.0 || groups.size() < 2) return;
  std::vector<std::vector<Instance>> originals;
  std::vector<std::vector<LabeledGraph>> shapes;
  for (const auto& c : groups) {
    originals.push_back(c.instances);
    std::vector<LabeledGraph> s;
    for (const auto& inst : c.instances) s.push_back(instance_graph(g, inst));
    shapes.push_back(std::move(s));
  }
  for (std::size_t a = 0; a < groups.size(); ++a) {
    for (std::size_t b = 0; b < groups.size(); ++b) {
      if (a == b) continue;
      for (std::size_t k = 0; k < originals[b].size(); ++k) {
        const Instance& inst = originals[b][k];
        if (contains_structure(groups[a].instances, inst)) continue;
        InstanceMatch m = is_instance_match(groups[a].definition, shapes[b][k], params.threshold,
                                            params.costs, params.budget);
        if (!m.accepted) continue;
        Instance absorbed = inst;
        absorbed.match_cost = m.cost;
        absorbed.vertex_map.assign(m.mapping.size(), kDeleted);
        for (std::size_t d = 0; d < m.mapping.size(); ++d) {
          if (m.mapping[d] != kDeleted) absorbed.vertex_map[d] = inst.vertices[m.mapping[d]];
        }
        groups[a].instances.push_back(std::move(absorbed));
      }
    }
  }
  for (auto& c : groups) sort_instances(c.instances);
}

struct Ranked {
  SubstructureCandidate candidate;
  std::string key;  // serialized definition, final tie-break
};

bool ranked_before(const Ranked& a, const Ranked& b) {
  if (a.candidate.value() != b.candidate.value()) return a.candidate.value() > b.candidate.value();
  const double sa = a.candidate.definition_bits.total;
  const double sb = b.candidate.definition_bits.total;
  if (sa != sb) return sa < sb;
  return a.key < b.key;
}

// Definitions already generated during one search, bucketed by signature.
class SeenRegistry {
 public:
  // True when an isomorphic definition was registered before; registers otherwise.
  bool seen_or_insert(const LabeledGraph& definition) {
    auto& bucket = buckets_[shape_fingerprint(definition)];
    for (const LabeledGraph& other : bucket) {
      if (find_isomorphism(other, definition)) return true;
    }
    bucket.push_back(definition);
    return false;
  }

 private:
  std::unordered_map<std::uint64_t, std::vector<LabeledGraph>> buckets_;
};

void score_all(std::vector<SubstructureCandidate>& batch, const LabeledGraph& g,
               const DiscoveryParams& params, double dl_original) {
  const std::size_t workers = std::min(std::max<std::size_t>(1, params.threads), batch.size());
  if (workers <= 1) {
    for (auto& c : batch) score_candidate(c, g, params, dl_original);
    return;
  }
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < batch.size(); i += workers) {
        score_candidate(batch[i], g, params, dl_original);
      }
    }));
  }
  for (auto& job : jobs) job.get();
}

}  // namespace

void DiscoveryParams::validate() const {
  if (beam_width < 1) throw std::invalid_argument("beam width must be at least 1");
  if (nbest < 1) throw std::invalid_argument("nbest must be at least 1");
  if (min_instances < 1) throw std::invalid_argument("min_instances must be at least 1");
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("match threshold must lie in [0, 1]");
  }
  costs.validate();
}

std::vector<SubstructureCandidate> make_seeds(const LabeledGraph& g,
                                              const DiscoveryParams& params) {
  std::map<Label, std::vector<std::size_t>> by_label;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) by_label[g.vertex(v).label].push_back(v);
  std::vector<SubstructureCandidate> seeds;
  for (const auto& [label, members] : by_label) {
    SubstructureCandidate c;
    for (std::size_t v : members) c.instances.push_back(exact_instance({v}, {}, {v}));
    c.definition = instance_graph(g, c.instances.front());
    seeds.push_back(std::move(c));
  }
  absorb_across_groups(seeds, g, params);
  return seeds;
}

std::vector<SubstructureCandidate> expand(const SubstructureCandidate& c, const LabeledGraph& g,
                                          const DiscoveryParams& params) {
  std::vector<Instance> grown;
  for (const Instance& inst : c.instances) {
    for (std::size_t v : inst.vertices) {
      for (std::size_t e : g.incident(v)) {
        if (std::binary_search(inst.edges.begin(), inst.edges.end(), e)) continue;
        Instance next;
        next.vertices = inst.vertices;
        std::size_t w = g.other_end(e, v);
        auto vpos = std::lower_bound(next.vertices.begin(), next.vertices.end(), w);
        if (vpos == next.vertices.end() || *vpos != w) next.vertices.insert(vpos, w);
        next.edges = inst.edges;
        next.edges.insert(std::lower_bound(next.edges.begin(), next.edges.end(), e), e);
        grown.push_back(std::move(next));
      }
    }
  }
  sort_instances(grown);
  grown.erase(std::unique(grown.begin(), grown.end(),
                          [](const Instance& a, const Instance& b) { return a.same_structure(b); }),
              grown.end());
  std::vector<SubstructureCandidate> groups = group_by_shape(g, std::move(grown));
  absorb_across_groups(groups, g, params);
  return groups;
}

std::vector<SubstructureCandidate> dedupe(std::vector<SubstructureCandidate> candidates) {
  std::vector<SubstructureCandidate> out;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  for (SubstructureCandidate& c : candidates) {
    auto& bucket = buckets[shape_fingerprint(c.definition)];
    bool merged = false;
    for (std::size_t idx : bucket) {
      SubstructureCandidate& kept = out[idx];
      auto iso = find_isomorphism(kept.definition, c.definition);
      if (!iso) continue;
      for (Instance& inst : c.instances) {
        if (contains_structure(kept.instances, inst)) continue;
        std::vector<std::size_t> map(iso->size(), kDeleted);
        if (inst.vertex_map.size() == iso->size()) {
          for (std::size_t k = 0; k < iso->size(); ++k) map[k] = inst.vertex_map[(*iso)[k]];
        }
        inst.vertex_map = std::move(map);
        kept.instances.push_back(std::move(inst));
      }
      sort_instances(kept.instances);
      kept.scored = false;
      merged = true;
      break;
    }
    if (merged) continue;
    bucket.push_back(out.size());
    out.push_back(std::move(c));
  }
  return out;
}

void score_candidate(SubstructureCandidate& c, const LabeledGraph& g,
                     const DiscoveryParams& params, double dl_original) {
  c.definition_bits = description_length(c.definition, g.label_count());
  Contraction contraction = contract_instances(g, c.instances, fresh_label(g));
  c.compressed_bits = description_length(contraction.graph);
  c.replaced = contraction.replaced.size();
  c.compression =
      make_compression_report(dl_original, c.definition_bits.total, c.compressed_bits.total);
  RuleContext context{params.weights, params.label_prefs, params.sub_labels, params.isolation_cap};
  c.rules = substructure_value(dl_original / c.combined_bits(), c.definition, c.instances, g,
                               context);
  c.scored = true;
}

bool ranks_before(const SubstructureCandidate& a, const SubstructureCandidate& b) {
  if (a.value() != b.value()) return a.value() > b.value();
  if (a.definition_bits.total != b.definition_bits.total) {
    return a.definition_bits.total < b.definition_bits.total;
  }
  return serialize_graph(a.definition) < serialize_graph(b.definition);
}

std::vector<SubstructureCandidate> discover(const LabeledGraph& g, const DiscoveryParams& params) {
  params.validate();
  if (g.empty()) throw GraphError("cannot discover substructures in an empty graph");
  const double dl_original = description_length(g).total;

  SeenRegistry seen;
  std::vector<Ranked> open;
  std::vector<Ranked> best;
  std::size_t evaluated = 0;
  auto budget_left = [&]() -> std::size_t {
    if (params.eval_limit == 0) return SIZE_MAX;
    return params.eval_limit > evaluated ? params.eval_limit - evaluated : 0;
  };

  // Scores a batch, keeps survivors of the prune test, and merges them into
  // the open list and the best list.
  auto admit = [&](std::vector<SubstructureCandidate> batch, const SubstructureCandidate* parent) {
    std::vector<SubstructureCandidate> fresh;
    for (auto& c : batch) {
      if (fresh.size() >= budget_left()) break;
      if (!seen.seen_or_insert(c.definition)) fresh.push_back(std::move(c));
    }
    score_all(fresh, g, params, dl_original);
    evaluated += fresh.size();
    for (auto& c : fresh) {
      if (params.prune && parent && c.combined_bits() > parent->combined_bits()) continue;
      Ranked r{std::move(c), {}};
      r.key = serialize_graph(r.candidate.definition);
      best.push_back(r);
      if (r.candidate.instances.size() >= params.min_instances) open.push_back(std::move(r));
    }
    std::stable_sort(open.begin(), open.end(), ranked_before);
    if (open.size() > params.beam_width) open.resize(params.beam_width);
    std::stable_sort(best.begin(), best.end(), ranked_before);
    if (best.size() > params.nbest) best.resize(params.nbest);
  };

  admit(make_seeds(g, params), nullptr);
  while (!open.empty() && budget_left() > 0) {
    Ranked parent = std::move(open.front());
    open.erase(open.begin());
    admit(expand(parent.candidate, g, params), &parent.candidate);
  }

  std::vector<SubstructureCandidate> out;
  for (auto& r : best) out.push_back(std::move(r.candidate));
  return out;
}

}  // namespace subdue

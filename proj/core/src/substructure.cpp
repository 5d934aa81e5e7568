#include "subdue/substructure.hpp"

#include <algorithm>

namespace subdue {

bool instance_less(const Instance& a, const Instance& b) {
  if (a.vertices != b.vertices) return a.vertices < b.vertices;
  return a.edges < b.edges;
}

LabeledGraph instance_graph(const LabeledGraph& g, const Instance& inst) {
  return induced_subgraph(g, inst.vertices, inst.edges);
}

std::size_t external_connections(const LabeledGraph& g, const Instance& inst) {
  auto inside = [&](std::size_t v) {
    return std::binary_search(inst.vertices.begin(), inst.vertices.end(), v);
  };
  std::size_t count = 0;
  for (std::size_t v : inst.vertices) {
    for (std::size_t e : g.incident(v)) {
      if (!inside(g.other_end(e, v))) ++count;
    }
  }
  return count;
}

bool shares_vertex(const Instance& a, const Instance& b) {
  auto i = a.vertices.begin();
  auto j = b.vertices.begin();
  while (i != a.vertices.end() && j != b.vertices.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

std::vector<std::size_t> disjoint_subset(std::span<const Instance> instances, bool exact_only) {
  std::vector<std::size_t> chosen;
  std::vector<char> used;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Instance& inst = instances[i];
    if (exact_only && !inst.exact()) continue;
    if (!inst.vertices.empty() && used.size() <= inst.vertices.back()) {
      used.resize(inst.vertices.back() + 1, 0);
    }
    bool clash = std::any_of(inst.vertices.begin(), inst.vertices.end(),
                             [&](std::size_t v) { return used[v] != 0; });
    if (clash) continue;
    chosen.push_back(i);
    for (std::size_t v : inst.vertices) used[v] = 1;
  }
  return chosen;
}

std::size_t SubstructureCandidate::exact_instance_count() const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(), [](const Instance& i) { return i.exact(); }));
}

}  // namespace subdue

#include "subdue/match.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <string>
#include <tuple>

namespace subdue {

namespace {

constexpr double kTolerance = 1e-9;

// Direction of an edge as seen from one of its endpoints.
enum EdgeKind : int { kUndirected = 0, kOutgoing = 1, kIncoming = 2 };

int edge_kind(const Edge& e, std::size_t from) {
  if (!e.directed) return kUndirected;
  return e.src == from ? kOutgoing : kIncoming;
}

struct EdgeEnd {
  std::size_t slot;  // search position of the other endpoint (or self)
  int label;
  int kind;

  friend bool operator<(const EdgeEnd& a, const EdgeEnd& b) {
    return std::tie(a.slot, a.label, a.kind) < std::tie(b.slot, b.label, b.kind);
  }
  bool same_key(const EdgeEnd& o) const { return label == o.label && kind == o.kind; }
};

struct Node {
  // assign[p] is the g2 vertex for the p-th g1 vertex in search order; n2
  // stands for lambda.
  std::vector<std::size_t> assign;
  double cost = 0.0;
};

class Matcher {
 public:
  Matcher(const LabeledGraph& g1, const LabeledGraph& g2, const DistortionCosts& costs)
      : g1_(g1), g2_(g2), costs_(costs), n1_(g1.vertex_count()), n2_(g2.vertex_count()) {
    if (g1.empty() || g2.empty()) throw GraphError("cannot match an empty graph");
    costs.validate();
    intern_labels();
    order_.resize(n1_);
    for (std::size_t i = 0; i < n1_; ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return g1_.degree(a) > g1_.degree(b);
    });
    position_.assign(n1_, 0);
    for (std::size_t p = 0; p < n1_; ++p) position_[order_[p]] = p;
    edge_pair_cost_ = std::min(costs_.edge_substitute, costs_.edge_delete + costs_.edge_insert);
  }

  std::optional<MatchResult> run(std::size_t node_limit, double bound) {
    auto worse = [](const Node& a, const Node& b) {
      if (a.cost != b.cost) return a.cost > b.cost;
      if (a.assign.size() != b.assign.size()) return a.assign.size() < b.assign.size();
      return a.assign > b.assign;
    };
    std::priority_queue<Node, std::vector<Node>, decltype(worse)> open(worse);
    open.push(Node{});
    std::size_t expanded = 0;
    while (!open.empty()) {
      if (expanded >= node_limit) return fallback(open, expanded, bound);
      Node node = open.top();
      open.pop();
      if (node.assign.size() == n1_) return finish(node, true, expanded);
      ++expanded;
      for (Node& child : children(node)) {
        if (child.cost > bound + kTolerance) continue;
        open.push(std::move(child));
      }
    }
    return std::nullopt;
  }

  double cost_of(const std::vector<std::size_t>& mapping) const {
    Node node;
    for (std::size_t p = 0; p < n1_; ++p) {
      std::size_t target = mapping.at(order_[p]);
      node = extend(node, target == kDeleted ? n2_ : target, image_slots(node));
    }
    return node.cost;
  }

 private:
  void intern_labels() {
    std::map<std::string, int> ids;
    auto id = [&](const std::string& s) {
      return ids.emplace(s, static_cast<int>(ids.size())).first->second;
    };
    for (const auto& v : g1_.vertices()) vlabel1_.push_back(id(v.label));
    for (const auto& v : g2_.vertices()) vlabel2_.push_back(id(v.label));
    for (const auto& e : g1_.edges()) elabel1_.push_back(id(e.label));
    for (const auto& e : g2_.edges()) elabel2_.push_back(id(e.label));
  }

  // image[y] = search position whose vertex maps to g2 vertex y, or n1.
  std::vector<std::size_t> image_slots(const Node& node) const {
    std::vector<std::size_t> image(n2_, n1_);
    for (std::size_t p = 0; p < node.assign.size(); ++p) {
      if (node.assign[p] < n2_) image[node.assign[p]] = p;
    }
    return image;
  }

  std::vector<Node> children(const Node& node) const {
    std::vector<std::size_t> image = image_slots(node);
    std::vector<Node> out;
    out.reserve(n2_ + 1);
    for (std::size_t x = 0; x < n2_; ++x) {
      if (image[x] == n1_) out.push_back(extend(node, x, image));
    }
    out.push_back(extend(node, n2_, image));
    return out;
  }

  Node extend(const Node& node, std::size_t target, const std::vector<std::size_t>& image) const {
    Node child;
    child.assign = node.assign;
    child.assign.push_back(target);
    child.cost = node.cost + increment(node, target, image);
    if (child.assign.size() == n1_) child.cost += completion(child);
    return child;
  }

  // Cost of assigning the next g1 vertex in search order to `target`.
  double increment(const Node& node, std::size_t target,
                   const std::vector<std::size_t>& image) const {
    const std::size_t p = node.assign.size();
    const std::size_t u = order_[p];
    double cost = 0.0;
    if (target == n2_) {
      cost += costs_.vertex_delete;
      for (std::size_t e : g1_.incident(u)) {
        std::size_t w = g1_.other_end(e, u);
        if (w == u || position_[w] < p) cost += costs_.edge_delete;
      }
      return cost;
    }
    if (vlabel1_[u] != vlabel2_[target]) cost += costs_.vertex_substitute;

    std::vector<EdgeEnd> left;
    std::vector<EdgeEnd> right;
    for (std::size_t e : g1_.incident(u)) {
      std::size_t w = g1_.other_end(e, u);
      std::size_t slot = w == u ? p : position_[w];
      if (slot > p) continue;
      if (slot < p && node.assign[slot] == n2_) {
        cost += costs_.edge_delete;
        continue;
      }
      left.push_back(EdgeEnd{slot, elabel1_[e], edge_kind(g1_.edge(e), u)});
    }
    for (std::size_t e : g2_.incident(target)) {
      std::size_t y = g2_.other_end(e, target);
      std::size_t slot = y == target ? p : image[y];
      if (slot >= p && y != target) continue;
      right.push_back(EdgeEnd{slot, elabel2_[e], edge_kind(g2_.edge(e), target)});
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());

    std::size_t i = 0;
    std::size_t j = 0;
    while (i < left.size() || j < right.size()) {
      std::size_t slot = std::min(i < left.size() ? left[i].slot : SIZE_MAX,
                                  j < right.size() ? right[j].slot : SIZE_MAX);
      std::size_t i_end = i;
      while (i_end < left.size() && left[i_end].slot == slot) ++i_end;
      std::size_t j_end = j;
      while (j_end < right.size() && right[j_end].slot == slot) ++j_end;
      // Both runs are sorted by (label, kind): count exact pairs by merging.
      std::size_t exact = 0;
      for (std::size_t a = i, b = j; a < i_end && b < j_end;) {
        if (left[a].same_key(right[b])) {
          ++exact;
          ++a;
          ++b;
        } else if (std::tie(left[a].label, left[a].kind) <
                   std::tie(right[b].label, right[b].kind)) {
          ++a;
        } else {
          ++b;
        }
      }
      std::size_t unmatched_left = (i_end - i) - exact;
      std::size_t unmatched_right = (j_end - j) - exact;
      std::size_t paired = std::min(unmatched_left, unmatched_right);
      cost += static_cast<double>(paired) * edge_pair_cost_ +
              static_cast<double>(unmatched_left - paired) * costs_.edge_delete +
              static_cast<double>(unmatched_right - paired) * costs_.edge_insert;
      i = i_end;
      j = j_end;
    }
    return cost;
  }

  // Insertion cost of every g2 vertex outside the image and of every g2 edge
  // touching one.
  double completion(const Node& node) const {
    std::vector<bool> used(n2_, false);
    for (std::size_t x : node.assign) {
      if (x < n2_) used[x] = true;
    }
    double cost = 0.0;
    for (std::size_t y = 0; y < n2_; ++y) {
      if (!used[y]) cost += costs_.vertex_insert;
    }
    for (const Edge& e : g2_.edges()) {
      if (!used[e.src] || !used[e.dst]) cost += costs_.edge_insert;
    }
    return cost;
  }

  template <typename Queue>
  std::optional<MatchResult> fallback(Queue& open, std::size_t expanded, double bound) const {
    std::optional<Node> best;
    while (!open.empty()) {
      Node node = open.top();
      open.pop();
      while (node.assign.size() < n1_) {
        std::vector<Node> next = children(node);
        ++expanded;
        auto pick = std::min_element(next.begin(), next.end(), [](const Node& a, const Node& b) {
          return a.cost < b.cost;
        });
        node = std::move(*pick);
      }
      if (!best || node.cost < best->cost) best = std::move(node);
    }
    if (!best || best->cost > bound + kTolerance) return std::nullopt;
    return finish(*best, false, expanded);
  }

  MatchResult finish(const Node& node, bool optimal, std::size_t expanded) const {
    MatchResult result;
    result.mapping.assign(n1_, kDeleted);
    for (std::size_t p = 0; p < n1_; ++p) {
      if (node.assign[p] < n2_) result.mapping[order_[p]] = node.assign[p];
    }
    result.cost = node.cost;
    result.optimal = optimal;
    result.nodes_expanded = expanded;
    return result;
  }

  const LabeledGraph& g1_;
  const LabeledGraph& g2_;
  const DistortionCosts& costs_;
  std::size_t n1_;
  std::size_t n2_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> position_;
  std::vector<int> vlabel1_, vlabel2_, elabel1_, elabel2_;
  double edge_pair_cost_ = 0.0;
};

}  // namespace

void DistortionCosts::validate() const {
  for (double c : {vertex_delete, vertex_insert, vertex_substitute, edge_delete, edge_insert,
                   edge_substitute}) {
    if (!(c >= 0.0) || !std::isfinite(c)) {
      throw std::invalid_argument("distortion costs must be finite and non-negative");
    }
  }
}

std::size_t MatchBudget::node_limit(std::size_t n1, std::size_t n2) const {
  if (absolute) return std::max<std::size_t>(1, *absolute);
  double limit = factor * static_cast<double>(n1) * static_cast<double>(n2);
  if (limit >= static_cast<double>(std::numeric_limits<std::size_t>::max())) {
    return std::numeric_limits<std::size_t>::max();
  }
  return std::max<std::size_t>(1, static_cast<std::size_t>(limit));
}

MatchBudget MatchBudget::unlimited() {
  return nodes(std::numeric_limits<std::size_t>::max());
}

MatchBudget MatchBudget::nodes(std::size_t limit) {
  MatchBudget b;
  b.absolute = limit;
  return b;
}

MatchResult match_cost(const LabeledGraph& g1, const LabeledGraph& g2,
                       const DistortionCosts& costs, const MatchBudget& budget) {
  Matcher matcher(g1, g2, costs);
  auto result = matcher.run(budget.node_limit(g1.vertex_count(), g2.vertex_count()),
                            std::numeric_limits<double>::infinity());
  // Deleting every g1 vertex is always reachable, so a result exists.
  return *result;
}

std::optional<MatchResult> match_within(const LabeledGraph& g1, const LabeledGraph& g2,
                                        const DistortionCosts& costs, const MatchBudget& budget,
                                        double bound) {
  Matcher matcher(g1, g2, costs);
  return matcher.run(budget.node_limit(g1.vertex_count(), g2.vertex_count()), bound);
}

double mapping_cost(const LabeledGraph& g1, const LabeledGraph& g2,
                    const std::vector<std::size_t>& mapping, const DistortionCosts& costs) {
  if (mapping.size() != g1.vertex_count()) {
    throw std::invalid_argument("mapping must cover every vertex of g1");
  }
  Matcher matcher(g1, g2, costs);
  return matcher.cost_of(mapping);
}

bool within_threshold(double cost, double threshold, std::size_t size) {
  return cost <= threshold * static_cast<double>(size) + kTolerance;
}

InstanceMatch is_instance_match(const LabeledGraph& sub, const LabeledGraph& candidate,
                                double threshold, const DistortionCosts& costs,
                                const MatchBudget& budget) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("match threshold must lie in [0, 1]");
  }
  const double bound = threshold * static_cast<double>(candidate.size());
  InstanceMatch out;
  out.cost = std::numeric_limits<double>::infinity();
  auto result = match_within(sub, candidate, costs, budget, bound);
  if (result) {
    out.accepted = true;
    out.cost = result->cost;
    out.mapping = std::move(result->mapping);
  }
  return out;
}

}  // namespace subdue

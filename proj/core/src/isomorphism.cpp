#include <algorithm>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "subdue/match.hpp"

namespace subdue {

namespace {

// FNV-1a, so colors do not depend on the standard library's hash.
std::uint64_t hash_bytes(std::string_view s, std::uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

// Edge as seen from one endpoint: label, and whether it leaves, enters, or is
// undirected.
std::uint64_t edge_token(const Edge& e, std::size_t from) {
  std::uint64_t kind = 0;
  if (e.directed) kind = e.src == e.dst ? 3 : (e.src == from ? 1 : 2);
  return mix(hash_bytes(e.label), kind);
}

std::size_t partner(const Edge& e, std::size_t from) { return e.src == from ? e.dst : e.src; }

// Color refinement until the number of classes stops growing.
std::vector<std::uint64_t> refine(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint64_t> color(n);
  for (std::size_t v = 0; v < n; ++v) color[v] = hash_bytes(g.vertex(v).label);
  auto classes = [](std::vector<std::uint64_t> c) {
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  };
  std::size_t count = classes(color);
  std::vector<std::uint64_t> next(n);
  std::vector<std::uint64_t> around;
  for (std::size_t round = 0; round < n; ++round) {
    for (std::size_t v = 0; v < n; ++v) {
      around.clear();
      for (std::size_t e : g.incident(v)) {
        const Edge& edge = g.edge(e);
        around.push_back(mix(edge_token(edge, v), color[partner(edge, v)]));
      }
      std::sort(around.begin(), around.end());
      std::uint64_t h = color[v];
      for (std::uint64_t x : around) h = mix(h, x);
      next[v] = h;
    }
    color.swap(next);
    std::size_t refined = classes(color);
    if (refined == count) break;
    count = refined;
  }
  return color;
}

class Search {
 public:
  Search(const LabeledGraph& a, const LabeledGraph& b, std::vector<std::uint64_t> ca,
         std::vector<std::uint64_t> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)),
        forward_(a.vertex_count(), kDeleted), backward_(b.vertex_count(), kDeleted) {
    order_ = visiting_order();
  }

  std::optional<std::vector<std::size_t>> run() {
    if (!extend(0)) return std::nullopt;
    return forward_;
  }

 private:
  // Breadth-first from the rarest color, so each vertex after the first in a
  // component already has a mapped neighbor.
  std::vector<std::size_t> visiting_order() const {
    const std::size_t n = a_.vertex_count();
    std::vector<std::size_t> frequency(n);
    for (std::size_t v = 0; v < n; ++v) {
      frequency[v] = static_cast<std::size_t>(std::count(ca_.begin(), ca_.end(), ca_[v]));
    }
    std::vector<std::size_t> by_rarity(n);
    for (std::size_t v = 0; v < n; ++v) by_rarity[v] = v;
    std::stable_sort(by_rarity.begin(), by_rarity.end(),
                     [&](std::size_t x, std::size_t y) { return frequency[x] < frequency[y]; });
    std::vector<std::size_t> order;
    std::vector<bool> queued(n, false);
    for (std::size_t root : by_rarity) {
      if (queued[root]) continue;
      queued[root] = true;
      std::size_t head = order.size();
      order.push_back(root);
      while (head < order.size()) {
        std::size_t v = order[head++];
        for (std::size_t e : a_.incident(v)) {
          std::size_t w = partner(a_.edge(e), v);
          if (!queued[w]) {
            queued[w] = true;
            order.push_back(w);
          }
        }
      }
    }
    return order;
  }

  // Edges from v to already-mapped vertices (or itself), as (partner in b's
  // numbering, token) pairs.
  std::vector<std::pair<std::size_t, std::uint64_t>> mapped_edges_a(std::size_t v,
                                                                    std::size_t image) const {
    std::vector<std::pair<std::size_t, std::uint64_t>> out;
    for (std::size_t e : a_.incident(v)) {
      const Edge& edge = a_.edge(e);
      std::size_t u = partner(edge, v);
      if (u == v) {
        out.emplace_back(image, edge_token(edge, v));
      } else if (forward_[u] != kDeleted) {
        out.emplace_back(forward_[u], edge_token(edge, v));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::pair<std::size_t, std::uint64_t>> mapped_edges_b(std::size_t w) const {
    std::vector<std::pair<std::size_t, std::uint64_t>> out;
    for (std::size_t e : b_.incident(w)) {
      const Edge& edge = b_.edge(e);
      std::size_t u = partner(edge, w);
      if (u == w || backward_[u] != kDeleted) out.emplace_back(u, edge_token(edge, w));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t v = order_[depth];
    for (std::size_t w = 0; w < b_.vertex_count(); ++w) {
      if (backward_[w] != kDeleted || cb_[w] != ca_[v]) continue;
      if (a_.degree(v) != b_.degree(w)) continue;
      if (mapped_edges_a(v, w) != mapped_edges_b(w)) continue;
      forward_[v] = w;
      backward_[w] = v;
      if (extend(depth + 1)) return true;
      forward_[v] = kDeleted;
      backward_[w] = kDeleted;
    }
    return false;
  }

  const LabeledGraph& a_;
  const LabeledGraph& b_;
  std::vector<std::uint64_t> ca_;
  std::vector<std::uint64_t> cb_;
  std::vector<std::size_t> forward_;
  std::vector<std::size_t> backward_;
  std::vector<std::size_t> order_;
};

}  // namespace

std::uint64_t shape_fingerprint(const LabeledGraph& g) {
  std::vector<std::uint64_t> colors = refine(g);
  std::sort(colors.begin(), colors.end());
  std::uint64_t h = mix(g.vertex_count(), g.edge_count());
  for (std::uint64_t c : colors) h = mix(h, c);
  return h;
}

std::optional<std::vector<std::size_t>> find_isomorphism(const LabeledGraph& a,
                                                         const LabeledGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
    return std::nullopt;
  }
  std::vector<std::uint64_t> ca = refine(a);
  std::vector<std::uint64_t> cb = refine(b);
  std::vector<std::uint64_t> sa = ca, sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  return Search(a, b, std::move(ca), std::move(cb)).run();
}

}  // namespace subdue

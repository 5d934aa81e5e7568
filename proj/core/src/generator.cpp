#include "subdue/generator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>

namespace subdue {

Rng::Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

std::uint64_t Rng::splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::size_t Rng::index(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Rng::index needs a positive bound");
  const std::uint64_t bound = n;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

double Rng::real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

void GenParams::validate() const {
  if (target_sub.empty()) throw std::invalid_argument("target substructure is empty");
  if (!is_connected(target_sub)) throw std::invalid_argument("target substructure is not connected");
  if (size_factor < 2) throw std::invalid_argument("size factor must be at least 2");
  if (label_factor < 1) throw std::invalid_argument("label factor must be at least 1");
  if (!(coverage_frac > 0.0 && coverage_frac <= 1.0)) {
    throw std::invalid_argument("coverage must lie in (0, 1]");
  }
}

namespace {

// Working copy of one embedded instance, in local vertex numbering.
struct Piece {
  std::vector<Label> vertex_labels;
  struct LocalEdge {
    std::size_t src;
    std::size_t dst;
    Label label;
    bool directed;
  };
  std::vector<LocalEdge> edges;
  std::vector<std::string> log;

  std::size_t size() const { return vertex_labels.size() + edges.size(); }
};

Piece copy_of(const LabeledGraph& sub) {
  Piece p;
  for (const Vertex& v : sub.vertices()) p.vertex_labels.push_back(v.label);
  for (const Edge& e : sub.edges()) p.edges.push_back({e.src, e.dst, e.label, e.directed});
  return p;
}

bool connected_without(const Piece& p, std::size_t skipped) {
  const std::size_t n = p.vertex_labels.size();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t parts = n;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i == skipped) continue;
    std::size_t a = find(p.edges[i].src);
    std::size_t b = find(p.edges[i].dst);
    if (a != b) {
      parent[a] = b;
      --parts;
    }
  }
  return parts == 1;
}

Label other_label(Rng& rng, const std::vector<Label>& pool, const Label& current) {
  Label next = current;
  while (next == current) next = pool[rng.index(pool.size())];
  return next;
}

// Applies one random transformation; false when the drawn kind is impossible.
bool distort_once(Piece& p, Rng& rng, const std::vector<Label>& pool, double directed_share) {
  const std::size_t n = p.vertex_labels.size();
  switch (rng.index(4)) {
    case 0: {
      if (pool.size() < 2) return false;
      std::size_t v = rng.index(n);
      Label next = other_label(rng, pool, p.vertex_labels[v]);
      p.log.push_back("vertex-relabel " + std::to_string(v) + " " + p.vertex_labels[v] + " -> " +
                      next);
      p.vertex_labels[v] = next;
      return true;
    }
    case 1: {
      if (p.edges.empty() || pool.size() < 2) return false;
      auto& e = p.edges[rng.index(p.edges.size())];
      Label next = other_label(rng, pool, e.label);
      p.log.push_back("edge-relabel " + std::to_string(e.src) + "-" + std::to_string(e.dst) + " " +
                      e.label + " -> " + next);
      e.label = next;
      return true;
    }
    case 2: {
      std::vector<std::size_t> removable;
      for (std::size_t i = 0; i < p.edges.size(); ++i) {
        if (connected_without(p, i)) removable.push_back(i);
      }
      if (removable.empty()) return false;
      std::size_t i = removable[rng.index(removable.size())];
      p.log.push_back("edge-delete " + std::to_string(p.edges[i].src) + "-" +
                      std::to_string(p.edges[i].dst) + " " + p.edges[i].label);
      p.edges.erase(p.edges.begin() + static_cast<std::ptrdiff_t>(i));
      return true;
    }
    default: {
      std::size_t a = rng.index(n);
      std::size_t b = rng.index(n);
      if (n > 1) {
        while (b == a) b = rng.index(n);
      }
      Label label = pool[rng.index(pool.size())];
      bool directed = rng.chance(directed_share);
      p.log.push_back("edge-insert " + std::to_string(a) + "-" + std::to_string(b) + " " + label);
      p.edges.push_back({a, b, label, directed});
      return true;
    }
  }
}

std::vector<Label> label_pool(const LabeledGraph& sub, std::size_t factor) {
  std::vector<Label> pool = sub.label_table();
  const std::size_t wanted = factor * pool.size();
  std::set<Label> taken(pool.begin(), pool.end());
  for (std::size_t k = 1; pool.size() < wanted; ++k) {
    Label extra = "L" + std::to_string(k);
    if (taken.insert(extra).second) pool.push_back(extra);
  }
  return pool;
}

}  // namespace

GeneratedGraph generate(const GenParams& p) {
  p.validate();
  Rng rng(p.seed);
  const LabeledGraph& sub = p.target_sub;
  const std::size_t sub_size = sub.size();
  const std::size_t total = p.size_factor * sub_size;
  const double target_cover = p.coverage_frac * static_cast<double>(total);
  const std::size_t min_filler = p.external_conns > 0 ? 1 : 0;

  std::vector<Label> pool = label_pool(sub, p.label_factor);
  double directed_share = 0.0;
  if (sub.edge_count() > 0) {
    std::size_t directed = 0;
    for (const Edge& e : sub.edges()) directed += e.directed ? 1 : 0;
    directed_share = static_cast<double>(directed) / static_cast<double>(sub.edge_count());
  }

  // Add instances while doing so moves the covered size toward the target. A
  // distorted copy that does not fit is redrawn a few times before giving up.
  std::vector<Piece> pieces;
  std::size_t covered = 0;
  while (true) {
    std::optional<Piece> piece;
    for (int draw = 0; draw < 16 && !piece; ++draw) {
      Piece candidate = copy_of(sub);
      std::size_t applied = 0;
      for (std::size_t attempts = 0; applied < p.distortions; ++attempts) {
        if (attempts > 64 * (p.distortions + 1)) {
          throw std::invalid_argument("cannot apply the requested distortions");
        }
        if (distort_once(candidate, rng, pool, directed_share)) ++applied;
      }
      const std::size_t needed =
          covered + candidate.size() + (pieces.size() + 1) * p.external_conns + min_filler;
      if (needed <= total) piece = std::move(candidate);
      if (p.distortions == 0) break;
    }
    if (!piece) break;
    const std::size_t next = covered + piece->size();
    const double gap_now = std::abs(static_cast<double>(covered) - target_cover);
    const double gap_next = std::abs(static_cast<double>(next) - target_cover);
    if (gap_next >= gap_now) break;
    covered = next;
    pieces.push_back(std::move(*piece));
  }
  if (pieces.empty() ||
      std::abs(static_cast<double>(covered) - target_cover) > static_cast<double>(sub_size)) {
    throw std::invalid_argument("coverage and size parameters cannot hold the instances");
  }

  const std::size_t rest = total - covered - pieces.size() * p.external_conns;
  const std::size_t filler_vertices = std::max(min_filler, (rest + 1) / 2);
  const std::size_t filler_edges = rest - filler_vertices;

  // Vertex records: instance vertices first, then filler; shuffled before ids
  // are assigned so instances are not contiguous.
  struct PendingVertex {
    Label label;
    std::size_t piece;  // pieces.size() for filler
  };
  std::vector<PendingVertex> pending;
  std::vector<std::size_t> piece_base;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    piece_base.push_back(pending.size());
    for (const Label& l : pieces[k].vertex_labels) pending.push_back({l, k});
  }
  const std::size_t filler_base = pending.size();
  for (std::size_t i = 0; i < filler_vertices; ++i) {
    pending.push_back({pool[rng.index(pool.size())], pieces.size()});
  }

  struct PendingEdge {
    std::size_t src;
    std::size_t dst;
    Label label;
    bool directed;
  };
  std::vector<PendingEdge> edges;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    for (const auto& e : pieces[k].edges) {
      edges.push_back({piece_base[k] + e.src, piece_base[k] + e.dst, e.label, e.directed});
    }
    const std::size_t n = pieces[k].vertex_labels.size();
    for (std::size_t c = 0; c < p.external_conns; ++c) {
      std::size_t inside = piece_base[k] + rng.index(n);
      std::size_t outside = filler_base + rng.index(filler_vertices);
      Label label = pool[rng.index(pool.size())];
      bool directed = rng.chance(directed_share);
      if (rng.chance(0.5)) std::swap(inside, outside);
      edges.push_back({inside, outside, label, directed});
    }
  }
  for (std::size_t i = 0; i < filler_edges; ++i) {
    std::size_t a = filler_base + rng.index(filler_vertices);
    std::size_t b = filler_base + rng.index(filler_vertices);
    if (filler_vertices > 1) {
      while (b == a) b = filler_base + rng.index(filler_vertices);
    }
    edges.push_back({a, b, pool[rng.index(pool.size())], rng.chance(directed_share)});
  }

  std::vector<std::size_t> order(pending.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.index(i)]);
  std::vector<VertexId> id_of(pending.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    id_of[order[pos]] = static_cast<VertexId>(pos + 1);
  }
  for (std::size_t i = edges.size(); i > 1; --i) std::swap(edges[i - 1], edges[rng.index(i)]);

  GraphBuilder builder;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    builder.add_vertex(static_cast<VertexId>(pos + 1), pending[order[pos]].label);
  }
  for (const auto& e : edges) builder.add_edge(id_of[e.src], id_of[e.dst], e.label, e.directed);

  GeneratedGraph out;
  out.graph = std::move(builder).build();
  out.truth.label_pool = pool;
  out.truth.target_size = sub_size;
  out.truth.graph_size = out.graph.size();
  out.truth.covered_size = covered;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    std::vector<VertexId> ids;
    for (std::size_t i = 0; i < pieces[k].vertex_labels.size(); ++i) {
      ids.push_back(id_of[piece_base[k] + i]);
    }
    out.truth.instance_locations.push_back(std::move(ids));
    out.truth.distortion_log.push_back(pieces[k].log);
  }
  return out;
}

std::vector<SuiteEntry> generate_suite(
    const std::vector<std::pair<std::string, LabeledGraph>>& subs, std::uint64_t seed,
    std::size_t size_factor) {
  if (subs.empty()) throw std::invalid_argument("suite needs at least one substructure");
  std::vector<SuiteEntry> suite;
  std::uint64_t counter = 0;
  for (const auto& [name, sub] : subs) {
    for (std::size_t labels : {1, 2}) {
      for (std::size_t ext : {1, 2}) {
        for (double cov : {0.6, 0.8}) {
          for (std::size_t distort : {0, 1, 2}) {
            SuiteEntry entry;
            entry.params.target_sub = sub;
            entry.params.size_factor = size_factor;
            entry.params.label_factor = labels;
            entry.params.external_conns = ext;
            entry.params.coverage_frac = cov;
            entry.params.distortions = distort;
            entry.params.seed = Rng::splitmix64(seed ^ Rng::splitmix64(++counter));
            entry.name = name + "_l" + std::to_string(labels) + "_x" + std::to_string(ext) + "_c" +
                         std::to_string(static_cast<int>(std::lround(cov * 100))) + "_d" +
                         std::to_string(distort);
            entry.generated = generate(entry.params);
            suite.push_back(std::move(entry));
          }
        }
      }
    }
  }
  return suite;
}

std::vector<std::pair<std::string, LabeledGraph>> default_substructures() {
  const std::vector<std::pair<std::size_t, std::size_t>> shapes = {{4, 4}, {5, 6}, {6, 7}, {8, 9}};
  const std::vector<Label> vertex_labels = {"A", "B", "C", "D", "E"};
  const std::vector<Label> edge_labels = {"x", "y", "z"};
  Rng rng(0x5eedULL);
  std::vector<std::pair<std::string, LabeledGraph>> subs;
  for (auto [nv, ne] : shapes) {
    GraphBuilder builder;
    for (std::size_t v = 0; v < nv; ++v) {
      builder.add_vertex(static_cast<VertexId>(v + 1), vertex_labels[rng.index(vertex_labels.size())]);
    }
    std::set<std::pair<std::size_t, std::size_t>> used;
    auto add = [&](std::size_t a, std::size_t b) {
      used.insert({std::min(a, b), std::max(a, b)});
      bool directed = rng.chance(0.5);
      builder.add_edge_by_index(a, b, edge_labels[rng.index(edge_labels.size())], directed);
    };
    for (std::size_t v = 1; v < nv; ++v) add(rng.index(v), v);
    while (used.size() < ne) {
      std::size_t a = rng.index(nv);
      std::size_t b = rng.index(nv);
      if (a == b || used.contains({std::min(a, b), std::max(a, b)})) continue;
      add(a, b);
    }
    subs.emplace_back("s" + std::to_string(nv) + "e" + std::to_string(ne),
                      std::move(builder).build());
  }
  return subs;
}

}  // namespace subdue

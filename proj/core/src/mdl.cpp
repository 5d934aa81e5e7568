#include "subdue/mdl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "subdue/hierarchy.hpp"
#include "subdue/substructure.hpp"

namespace subdue {

namespace {

void require_vertices(const LabeledGraph& g) {
  if (g.empty()) throw GraphError("cannot encode an empty graph");
}

std::size_t effective_labels(const LabeledGraph& g, std::optional<std::size_t> label_count) {
  std::size_t lu = label_count.value_or(g.label_count());
  if (lu == 0) throw GraphError("label count must be positive");
  return lu;
}

}  // namespace

AdjacencyStats adjacency_stats(const LabeledGraph& g) {
  AdjacencyStats stats;
  stats.row_ones.assign(g.vertex_count(), 0);
  stats.edges = g.edge_count();
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  cells.reserve(g.edge_count());
  for (const Edge& e : g.edges()) cells.emplace_back(e.src, e.dst);
  std::sort(cells.begin(), cells.end());
  for (std::size_t i = 0; i < cells.size();) {
    std::size_t j = i;
    while (j < cells.size() && cells[j] == cells[i]) ++j;
    ++stats.row_ones[cells[i].first];
    ++stats.nonzero_entries;
    stats.max_multiplicity = std::max(stats.max_multiplicity, j - i);
    i = j;
  }
  for (std::size_t k : stats.row_ones) stats.max_row_ones = std::max(stats.max_row_ones, k);
  return stats;
}

double log2_binomial(std::size_t n, std::size_t k) {
  if (k == 0 || k >= n) return 0.0;
  const double nn = static_cast<double>(n);
  const double kk = static_cast<double>(k);
  return (std::lgamma(nn + 1.0) - std::lgamma(kk + 1.0) - std::lgamma(nn - kk + 1.0)) /
         std::numbers::ln2;
}

double vbits(const LabeledGraph& g, std::optional<std::size_t> label_count) {
  require_vertices(g);
  const double v = static_cast<double>(g.vertex_count());
  const double lu = static_cast<double>(effective_labels(g, label_count));
  return std::log2(v) + v * std::log2(lu);
}

namespace {

double rbits_from(const AdjacencyStats& stats, std::size_t v) {
  double bits = static_cast<double>(v + 1) * std::log2(static_cast<double>(stats.max_row_ones + 1));
  for (std::size_t k : stats.row_ones) bits += log2_binomial(v, k);
  return bits;
}

double ebits_from(const AdjacencyStats& stats, std::size_t label_count) {
  if (stats.edges == 0) return 0.0;
  const double e = static_cast<double>(stats.edges);
  return e * (1.0 + std::log2(static_cast<double>(label_count))) +
         static_cast<double>(stats.nonzero_entries + 1) *
             std::log2(static_cast<double>(stats.max_multiplicity));
}

}  // namespace

double rbits(const LabeledGraph& g) {
  require_vertices(g);
  return rbits_from(adjacency_stats(g), g.vertex_count());
}

double ebits(const LabeledGraph& g, std::optional<std::size_t> label_count) {
  require_vertices(g);
  return ebits_from(adjacency_stats(g), effective_labels(g, label_count));
}

EncodingBreakdown description_length(const LabeledGraph& g,
                                     std::optional<std::size_t> label_count) {
  EncodingBreakdown out;
  out.vbits = vbits(g, label_count);
  AdjacencyStats stats = adjacency_stats(g);
  out.rbits = rbits_from(stats, g.vertex_count());
  out.ebits = ebits_from(stats, effective_labels(g, label_count));
  out.total = out.vbits + out.rbits + out.ebits;
  return out;
}

CompressionReport make_compression_report(double dl_original, double dl_substructure,
                                          double dl_compressed) {
  CompressionReport report;
  report.dl_original = dl_original;
  report.dl_substructure = dl_substructure;
  report.dl_compressed = dl_compressed;
  report.compression = (dl_substructure + dl_compressed) / dl_original;
  return report;
}

CompressionReport dl_with_substructure(const LabeledGraph& g, const SubstructureCandidate& s) {
  const double original = description_length(g).total;
  const double sub = description_length(s.definition, g.label_count()).total;
  LabeledGraph compressed = contract_instances(g, s.instances, fresh_label(g)).graph;
  return make_compression_report(original, sub, description_length(compressed).total);
}

}  // namespace subdue

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "subdue/graph.hpp"

namespace subdue {

struct SubstructureCandidate;

/// Bit lengths of the three parts of the adjacency-matrix graph encoding.
struct EncodingBreakdown {
  double vbits = 0.0;
  double rbits = 0.0;
  double ebits = 0.0;
  double total = 0.0;
};

/// Compression of a graph by one substructure. `compression` is
/// (dl_substructure + dl_compressed) / dl_original; lower is better.
struct CompressionReport {
  double dl_original = 0.0;
  double dl_substructure = 0.0;
  double dl_compressed = 0.0;
  double compression = 0.0;
};

/// Counts read off the adjacency matrix. Undirected edges occupy the single
/// entry (src, dst) with src <= dst; an entry is 1 when it holds any edge.
struct AdjacencyStats {
  std::vector<std::size_t> row_ones;  // k_i
  std::size_t max_row_ones = 0;       // b
  std::size_t nonzero_entries = 0;    // K
  std::size_t max_multiplicity = 0;   // m (0 for an edgeless graph)
  std::size_t edges = 0;              // e
};

AdjacencyStats adjacency_stats(const LabeledGraph& g);

/// lg C(n, k), exactly 0 for k == 0 or k == n.
double log2_binomial(std::size_t n, std::size_t k);

// `label_count` overrides l_u; by default the graph's own label table is used.
double vbits(const LabeledGraph& g, std::optional<std::size_t> label_count = std::nullopt);
double rbits(const LabeledGraph& g);
double ebits(const LabeledGraph& g, std::optional<std::size_t> label_count = std::nullopt);

EncodingBreakdown description_length(const LabeledGraph& g,
                                     std::optional<std::size_t> label_count = std::nullopt);

CompressionReport make_compression_report(double dl_original, double dl_substructure,
                                          double dl_compressed);

/// I(S) encodes the definition against g's label table; I(G|S) encodes the
/// graph with the candidate's disjoint exact instances contracted.
CompressionReport dl_with_substructure(const LabeledGraph& g, const SubstructureCandidate& s);

}  // namespace subdue

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "subdue/discovery.hpp"
#include "subdue/graph.hpp"
#include "subdue/mdl.hpp"

namespace subdue::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SweepRow {
  double threshold = 0.0;
  bool found = false;  // false when discovery returned nothing
  CompressionReport report;
  std::size_t definition_vertices = 0;
  std::size_t definition_edges = 0;
  std::size_t instances = 0;
  std::size_t replaced = 0;
};

struct SweepTable {
  std::vector<SweepRow> rows;  // in threshold order
  std::size_t optimal = 0;     // row with the lowest compression (first on ties)
};

/// One discovery run per threshold, best candidate's compression per row.
/// Runs execute on up to `jobs` threads; rows keep the input order. Throws
/// std::invalid_argument for an empty list or a threshold outside [0, 1].
SweepTable sweep_thresholds(const LabeledGraph& g, const DiscoveryParams& params,
                            const std::vector<double>& thresholds, std::size_t jobs = 1);

}  // namespace subdue::cli

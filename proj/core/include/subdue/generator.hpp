#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "subdue/graph.hpp"

namespace subdue {

/// Seedable generator with platform-independent draws: mt19937_64 seeded
/// through splitmix64, integers by rejection sampling, reals from the top
/// 53 bits. Standard-library distributions are avoided because their output is
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n must be positive.
  std::size_t index(std::size_t n);
  /// Uniform in [0, 1).
  double real();
  bool chance(double p) { return real() < p; }

  static std::uint64_t splitmix64(std::uint64_t x);

 private:
  std::mt19937_64 engine_;
};

struct GenParams {
  LabeledGraph target_sub;
  std::size_t size_factor = 15;
  /// Label pool size = label_factor * distinct labels of target_sub.
  std::size_t label_factor = 1;
  /// Edges joining each embedded instance to the rest of the graph.
  std::size_t external_conns = 1;
  double coverage_frac = 0.6;
  /// Random transformations applied to every embedded instance.
  std::size_t distortions = 0;
  std::uint64_t seed = 0;

  void validate() const;
};

struct GroundTruth {
  std::vector<std::vector<VertexId>> instance_locations;
  /// One list per instance, e.g. "edge-delete 12 -> 14 x".
  std::vector<std::vector<std::string>> distortion_log;
  std::vector<Label> label_pool;
  std::size_t target_size = 0;
  std::size_t graph_size = 0;
  std::size_t covered_size = 0;  // vertices + edges inside instances
};

struct GeneratedGraph {
  LabeledGraph graph;
  GroundTruth truth;
};

/// Embeds copies of p.target_sub in random filler structure. Throws
/// std::invalid_argument when the parameters cannot be met.
GeneratedGraph generate(const GenParams& p);

struct SuiteEntry {
  std::string name;  // <sub>_l<labels>_x<ext>_c<coverage%>_d<distortions>
  GenParams params;
  GeneratedGraph generated;
};

/// Full 2 x 2 x 2 x 3 design per substructure (label factor, external
/// connections, coverage, distortions).
std::vector<SuiteEntry> generate_suite(const std::vector<std::pair<std::string, LabeledGraph>>& subs,
                                       std::uint64_t seed, std::size_t size_factor = 15);

/// Four connected random substructures named s<V>e<E> after their vertex and
/// edge counts, fixed by an internal seed.
std::vector<std::pair<std::string, LabeledGraph>> default_substructures();

}  // namespace subdue

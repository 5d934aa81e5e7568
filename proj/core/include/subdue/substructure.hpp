#pragma once

#include <cstddef>
#include <vector>

#include "subdue/graph.hpp"
#include "subdue/instance.hpp"
#include "subdue/mdl.hpp"
#include "subdue/rules.hpp"

namespace subdue {

struct SubstructureCandidate {
  LabeledGraph definition;
  std::vector<Instance> instances;

  EncodingBreakdown definition_bits;  // I(S)
  EncodingBreakdown compressed_bits;  // I(G|S)
  CompressionReport compression;
  RuleReport rules;
  std::size_t replaced = 0;  // disjoint exact instances contracted for I(G|S)
  bool scored = false;

  double value() const noexcept { return rules.value; }
  double combined_bits() const noexcept {
    return compression.dl_substructure + compression.dl_compressed;
  }
  std::size_t exact_instance_count() const;
};

}  // namespace subdue

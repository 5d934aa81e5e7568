#pragma once

#include <string>

#include "json.hpp"
#include "subdue/generator.hpp"
#include "subdue/hierarchy.hpp"
#include "subdue/match.hpp"
#include "subdue_cli/cli.hpp"

namespace subdue::cli {

using Json = nlohmann::ordered_json;

/// Pretty-prints with every floating-point number in fixed notation with six
/// decimals; non-finite numbers become null.
std::string dump(const Json& j);

Json to_json(const EncodingBreakdown& b);
Json to_json(const CompressionReport& r);
Json to_json(const RuleReport& r);
Json graph_json(const LabeledGraph& g);
Json graph_summary(const LabeledGraph& g);
Json candidate_json(const SubstructureCandidate& c, const LabeledGraph& host, std::size_t rank);
Json level_json(const HierarchyLevel& level, const LabeledGraph& input);
Json match_json(const MatchResult& r, const LabeledGraph& g1, const LabeledGraph& g2);
Json params_json(const DiscoveryParams& p);
Json sweep_json(const SweepTable& t, double dl_original);
Json truth_json(const std::string& name, const GenParams& p, const GroundTruth& t);

}  // namespace subdue::cli

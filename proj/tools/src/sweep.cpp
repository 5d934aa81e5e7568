#include <algorithm>
#include <future>
#include <stdexcept>

#include "subdue_cli/cli.hpp"

namespace subdue::cli {

SweepTable sweep_thresholds(const LabeledGraph& g, const DiscoveryParams& params,
                            const std::vector<double>& thresholds, std::size_t jobs) {
  if (thresholds.empty()) throw std::invalid_argument("threshold list is empty");
  for (double t : thresholds) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("thresholds must lie in [0, 1]");
  }

  SweepTable table;
  table.rows.resize(thresholds.size());
  auto run_one = [&](std::size_t i) {
    DiscoveryParams p = params;
    p.threshold = thresholds[i];
    SweepRow& row = table.rows[i];
    row.threshold = thresholds[i];
    std::vector<SubstructureCandidate> found = discover(g, p);
    if (found.empty()) return;
    const SubstructureCandidate& best = found.front();
    row.found = true;
    row.report = best.compression;
    row.definition_vertices = best.definition.vertex_count();
    row.definition_edges = best.definition.edge_count();
    row.instances = best.instances.size();
    row.replaced = best.replaced;
  };

  const std::size_t workers = std::clamp<std::size_t>(jobs, 1, thresholds.size());
  if (workers == 1) {
    for (std::size_t i = 0; i < thresholds.size(); ++i) run_one(i);
  } else {
    std::vector<std::future<void>> running;
    for (std::size_t w = 0; w < workers; ++w) {
      running.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < thresholds.size(); i += workers) run_one(i);
      }));
    }
    for (auto& f : running) f.get();
  }

  bool any = false;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    if (!table.rows[i].found) continue;
    if (!any || table.rows[i].report.compression < table.rows[table.optimal].report.compression) {
      table.optimal = i;
      any = true;
    }
  }
  return table;
}

}  // namespace subdue::cli

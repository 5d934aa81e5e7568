#include "subdue_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "report.hpp"
#include "subdue/generator.hpp"
#include "subdue/hierarchy.hpp"

namespace subdue::cli {

namespace {

namespace fs = std::filesystem;

// Raised for failures reading or writing files; maps to the input exit code.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string format = "json";
  std::string path;
};

struct SearchOptions {
  DiscoveryParams params;
  std::vector<std::string> label_prefs;
  std::optional<double> w_label;
  std::optional<double> isolation_cap;
  double node_factor = 10.0;
  std::optional<std::size_t> node_limit;
  std::size_t passes = 1;
};

std::string fixed(double v, int decimals = 6) {
  if (!std::isfinite(v)) return "inf";
  if (std::fabs(v) < 0.5 * std::pow(10.0, -decimals)) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

void add_output(CLI::App* app, Output& o) {
  app->add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app->add_option("--out", o.path, "Write the report to this file instead of stdout");
}

void add_costs(CLI::App* app, DistortionCosts& c) {
  auto nonneg = CLI::Range(0.0, std::numeric_limits<double>::max());
  app->add_option("--vertex-delete", c.vertex_delete)->check(nonneg)->capture_default_str();
  app->add_option("--vertex-insert", c.vertex_insert)->check(nonneg)->capture_default_str();
  app->add_option("--vertex-substitute", c.vertex_substitute)->check(nonneg)->capture_default_str();
  app->add_option("--edge-delete", c.edge_delete)->check(nonneg)->capture_default_str();
  app->add_option("--edge-insert", c.edge_insert)->check(nonneg)->capture_default_str();
  app->add_option("--edge-substitute", c.edge_substitute)->check(nonneg)->capture_default_str();
}

void add_budget(CLI::App* app, double& factor, std::optional<std::size_t>& limit) {
  app->add_option("--node-factor", factor, "Match node limit = factor * n1 * n2")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--node-limit", limit, "Absolute match node limit (overrides --node-factor)")
      ->check(CLI::PositiveNumber);
}

void add_search(CLI::App* app, SearchOptions& s, bool with_passes) {
  DiscoveryParams& p = s.params;
  app->add_option("--beam", p.beam_width, "Beam width")->check(CLI::PositiveNumber)->capture_default_str();
  app->add_option("--threshold", p.threshold, "Match threshold")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app->add_option("--limit", p.eval_limit, "Maximum candidates evaluated (0 = unbounded)")
      ->capture_default_str();
  app->add_flag("--prune", p.prune, "Discard expansions that describe the graph worse than their parent");
  app->add_option("--nbest", p.nbest, "Number of substructures reported")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--min-instances", p.min_instances, "Expand only candidates with at least this many instances")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--threads", p.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  if (with_passes) {
    app->add_option("--passes", s.passes, "Hierarchical discovery passes")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }
  app->add_option("--w-compact", p.weights.compactness, "Compactness exponent")->capture_default_str();
  app->add_option("--w-connect", p.weights.connectivity, "Connectivity exponent")->capture_default_str();
  app->add_option("--w-cover", p.weights.coverage, "Coverage exponent")->capture_default_str();
  app->add_option("--w-label", s.w_label, "Label-preference exponent (default 1 with --label-pref)");
  app->add_option("--w-hier", p.weights.hierarchy, "Bias toward earlier passes' substructures")
      ->capture_default_str();
  app->add_option("--label-pref", s.label_prefs, "Label preference NAME=VALUE (repeatable)");
  app->add_option("--isolation-cap", s.isolation_cap,
                  "Connectivity value for isolated instances (default: vertex count)");
  add_costs(app, p.costs);
  add_budget(app, s.node_factor, s.node_limit);
}

// Completes params from the raw options; throws std::invalid_argument.
DiscoveryParams resolve(SearchOptions& s) {
  DiscoveryParams p = s.params;
  for (const std::string& item : s.label_prefs) {
    auto eq = item.rfind('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("--label-pref expects NAME=VALUE, got '" + item + "'");
    }
    double value = 0.0;
    try {
      std::size_t used = 0;
      value = std::stod(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw std::invalid_argument("--label-pref value is not a number: '" + item + "'");
    }
    if (!(value >= 0.0) || !std::isfinite(value)) {
      throw std::invalid_argument("--label-pref value must be non-negative: '" + item + "'");
    }
    p.label_prefs[item.substr(0, eq)] = value;
  }
  p.weights.label_preference = s.w_label.value_or(p.label_prefs.empty() ? 0.0 : 1.0);
  p.isolation_cap = s.isolation_cap;
  p.budget.factor = s.node_factor;
  if (s.node_limit) p.budget = MatchBudget::nodes(*s.node_limit);
  p.validate();
  return p;
}

LabeledGraph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  try {
    return parse_graph(in);
  } catch (const GraphError& e) {
    std::string where = e.line() ? path + ":" + std::to_string(e.line()) : path;
    throw InputError(where + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text) || !f.flush()) throw InputError("cannot write '" + path + "'");
}

void emit(const Output& o, const std::string& text, std::ostream& out) {
  if (o.path.empty()) {
    out << text;
  } else {
    write_file(o.path, text);
  }
}

std::vector<double> parse_thresholds(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw std::invalid_argument("bad threshold '" + item + "'");
    values.push_back(v);
  }
  if (values.empty()) throw std::invalid_argument("threshold list is empty");
  return values;
}

std::string graph_name(const std::string& path) { return fs::path(path).stem().string(); }

std::string design_name(const std::string& sub, const GenParams& p) {
  return sub + "_l" + std::to_string(p.label_factor) + "_x" + std::to_string(p.external_conns) +
         "_c" + std::to_string(static_cast<int>(std::lround(p.coverage_frac * 100))) + "_d" +
         std::to_string(p.distortions);
}

// --- subcommands -----------------------------------------------------------

struct EncodeArgs {
  std::string graph;
  std::optional<std::size_t> label_count;
  Output out;
};

int do_encode(EncodeArgs& a, std::ostream& out) {
  LabeledGraph g = read_graph(a.graph);
  if (g.empty()) throw InputError("graph '" + a.graph + "' has no vertices");
  EncodingBreakdown b = description_length(g, a.label_count);
  if (a.out.format == "text") {
    std::ostringstream t;
    t << "vbits " << fixed(b.vbits) << "\nrbits " << fixed(b.rbits) << "\nebits "
      << fixed(b.ebits) << "\ntotal " << fixed(b.total) << '\n';
    emit(a.out, t.str(), out);
    return kExitOk;
  }
  Json j = to_json(b);
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["label_count"] = a.label_count.value_or(g.label_count());
  emit(a.out, dump(j), out);
  return kExitOk;
}

struct MatchArgs {
  std::string g1;
  std::string g2;
  DistortionCosts costs;
  double node_factor = 10.0;
  std::optional<std::size_t> node_limit;
  Output out;
};

int do_match(MatchArgs& a, std::ostream& out) {
  LabeledGraph g1 = read_graph(a.g1);
  LabeledGraph g2 = read_graph(a.g2);
  if (g1.empty() || g2.empty()) throw InputError("cannot match an empty graph");
  MatchBudget budget;
  budget.factor = a.node_factor;
  if (a.node_limit) budget = MatchBudget::nodes(*a.node_limit);
  MatchResult r = match_cost(g1, g2, a.costs, budget);
  if (a.out.format == "text") {
    std::ostringstream t;
    t << "cost " << fixed(r.cost) << "\noptimal " << (r.optimal ? "true" : "false") << '\n';
    for (std::size_t i = 0; i < r.mapping.size(); ++i) {
      t << g1.vertex(i).id << " -> ";
      if (r.mapping[i] == kDeleted) {
        t << "lambda\n";
      } else {
        t << g2.vertex(r.mapping[i]).id << '\n';
      }
    }
    emit(a.out, t.str(), out);
    return kExitOk;
  }
  emit(a.out, dump(match_json(r, g1, g2)), out);
  return kExitOk;
}

struct DiscoverArgs {
  std::string graph;
  SearchOptions search;
  Output out;
};

std::string candidate_table(const std::vector<SubstructureCandidate>& found) {
  std::ostringstream t;
  t << std::left << std::setw(5) << "rank" << std::setw(13) << "value" << std::setw(13)
    << "compression" << std::setw(13) << "I(S)" << std::setw(13) << "I(G|S)" << std::setw(10)
    << "instances" << "exact\n";
  for (std::size_t i = 0; i < found.size(); ++i) {
    const auto& c = found[i];
    t << std::setw(5) << i + 1 << std::setw(13) << fixed(c.value(), 4) << std::setw(13)
      << fixed(c.compression.compression, 4) << std::setw(13)
      << fixed(c.compression.dl_substructure, 4) << std::setw(13)
      << fixed(c.compression.dl_compressed, 4) << std::setw(10) << c.instances.size()
      << c.exact_instance_count() << '\n';
    std::istringstream def(serialize_graph(c.definition));
    for (std::string line; std::getline(def, line);) t << "     " << line << '\n';
  }
  return t.str();
}

int do_discover(DiscoverArgs& a, std::ostream& out) {
  DiscoveryParams params = resolve(a.search);
  LabeledGraph g = read_graph(a.graph);
  if (g.empty()) throw InputError("graph '" + a.graph + "' has no vertices");
  std::vector<SubstructureCandidate> found = discover(g, params);
  std::vector<HierarchyLevel> levels;
  if (a.search.passes > 1) levels = hierarchical_discover(g, params, a.search.passes);

  if (a.out.format == "text") {
    std::ostringstream t;
    t << "graph " << a.graph << ": " << g.vertex_count() << " vertices, " << g.edge_count()
      << " edges, DL " << fixed(description_length(g).total, 4) << " bits\n";
    t << candidate_table(found);
    for (const auto& level : levels) {
      t << "pass " << level.pass_index << " " << level.sub_label << ": replaced "
        << level.replaced << ", compressed graph " << level.compressed_graph.vertex_count()
        << " vertices " << level.compressed_graph.edge_count() << " edges, compression so far "
        << fixed(level.compression_so_far, 4) << '\n';
    }
    emit(a.out, t.str(), out);
    return kExitOk;
  }

  Json j;
  j["input"] = graph_summary(g);
  j["params"] = params_json(params);
  Json cands = Json::array();
  for (std::size_t i = 0; i < found.size(); ++i) cands.push_back(candidate_json(found[i], g, i + 1));
  j["candidates"] = std::move(cands);
  if (a.search.passes > 1) {
    j["passes"] = a.search.passes;
    Json h = Json::array();
    LabeledGraph current = g;
    for (const auto& level : levels) {
      h.push_back(level_json(level, current));
      current = level.compressed_graph;
    }
    j["hierarchy"] = std::move(h);
  }
  emit(a.out, dump(j), out);
  return kExitOk;
}

struct CompressArgs {
  std::string graph;
  SearchOptions search;
  std::string graph_out;
  Output out;
};

int do_compress(CompressArgs& a, std::ostream& out) {
  DiscoveryParams params = resolve(a.search);
  LabeledGraph g = read_graph(a.graph);
  if (g.empty()) throw InputError("graph '" + a.graph + "' has no vertices");
  std::vector<HierarchyLevel> levels = hierarchical_discover(g, params, a.search.passes);
  const LabeledGraph& final_graph = levels.empty() ? g : levels.back().compressed_graph;
  if (!a.graph_out.empty()) write_file(a.graph_out, serialize_graph(final_graph));

  if (a.out.format == "text") {
    emit(a.out, serialize_graph(final_graph), out);
    return kExitOk;
  }
  Json j;
  j["input"] = graph_summary(g);
  j["params"] = params_json(params);
  j["passes"] = a.search.passes;
  Json h = Json::array();
  LabeledGraph current = g;
  for (const auto& level : levels) {
    h.push_back(level_json(level, current));
    current = level.compressed_graph;
  }
  j["hierarchy"] = std::move(h);
  j["final_graph"] = graph_summary(final_graph);
  j["compression"] = levels.empty() ? 1.0 : levels.back().compression_so_far;
  emit(a.out, dump(j), out);
  return kExitOk;
}

struct GenerateArgs {
  std::vector<std::string> subs;
  std::vector<std::string> sub_names;
  bool suite = false;
  std::size_t factor = 15;
  std::size_t labels = 1;
  std::size_t ext = 1;
  double coverage = 0.6;
  std::size_t distort = 0;
  std::uint64_t seed = 0;
  std::string dir;
  Output out;
};

int do_generate(GenerateArgs& a, std::ostream& out) {
  std::vector<std::pair<std::string, LabeledGraph>> subs;
  for (const std::string& path : a.subs) subs.emplace_back(graph_name(path), read_graph(path));
  if (!a.sub_names.empty()) {
    auto defaults = default_substructures();
    for (const std::string& name : a.sub_names) {
      auto it = std::find_if(defaults.begin(), defaults.end(),
                             [&](const auto& d) { return d.first == name; });
      if (it == defaults.end()) throw std::invalid_argument("unknown default substructure '" + name + "'");
      subs.push_back(*it);
    }
  }
  if (subs.empty()) {
    if (!a.suite) throw std::invalid_argument("generate needs --sub FILE or --sub-name NAME");
    subs = default_substructures();
  }

  struct Produced {
    std::string name;
    GenParams params;
    GeneratedGraph generated;
  };
  std::vector<Produced> produced;
  if (a.suite) {
    for (SuiteEntry& e : generate_suite(subs, a.seed, a.factor)) {
      produced.push_back({e.name, std::move(e.params), std::move(e.generated)});
    }
  } else {
    if (subs.size() != 1) throw std::invalid_argument("single-graph mode takes exactly one substructure");
    GenParams p;
    p.target_sub = subs[0].second;
    p.size_factor = a.factor;
    p.label_factor = a.labels;
    p.external_conns = a.ext;
    p.coverage_frac = a.coverage;
    p.distortions = a.distort;
    p.seed = a.seed;
    GeneratedGraph g = generate(p);
    produced.push_back({design_name(subs[0].first, p), p, std::move(g)});
  }

  std::error_code ec;
  fs::create_directories(a.dir, ec);
  if (ec) throw InputError("cannot create directory '" + a.dir + "': " + ec.message());
  Json list = Json::array();
  std::ostringstream text;
  for (const Produced& item : produced) {
    const std::string graph_file = item.name + ".graph";
    const std::string truth_file = item.name + ".truth.json";
    write_file((fs::path(a.dir) / graph_file).string(), serialize_graph(item.generated.graph));
    write_file((fs::path(a.dir) / truth_file).string(),
               dump(truth_json(item.name, item.params, item.generated.truth)));
    list.push_back(Json{{"name", item.name},
                        {"graph_file", graph_file},
                        {"truth_file", truth_file},
                        {"vertices", item.generated.graph.vertex_count()},
                        {"edges", item.generated.graph.edge_count()},
                        {"instances", item.generated.truth.instance_locations.size()},
                        {"covered_size", item.generated.truth.covered_size}});
    text << item.name << ' ' << item.generated.graph.vertex_count() << " vertices "
         << item.generated.graph.edge_count() << " edges "
         << item.generated.truth.instance_locations.size() << " instances\n";
  }
  if (a.out.format == "text") {
    emit(a.out, text.str(), out);
  } else {
    emit(a.out, dump(Json{{"directory", a.dir}, {"graphs", std::move(list)}}), out);
  }
  return kExitOk;
}

struct SweepArgs {
  std::string graph;
  SearchOptions search;
  std::string thresholds = "0.0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1.0";
  Output out;
};

int do_sweep(SweepArgs& a, std::ostream& out) {
  std::vector<double> thresholds = parse_thresholds(a.thresholds);
  DiscoveryParams params = resolve(a.search);
  LabeledGraph g = read_graph(a.graph);
  if (g.empty()) throw InputError("graph '" + a.graph + "' has no vertices");
  // Sweep parallelism is across thresholds; each run is sequential.
  const std::size_t jobs = params.threads;
  params.threads = 1;
  SweepTable table = sweep_thresholds(g, params, thresholds, jobs);
  const double dl = description_length(g).total;

  if (a.out.format == "text") {
    std::ostringstream t;
    t << std::left << std::setw(11) << "threshold" << std::setw(16) << "DL original"
      << std::setw(16) << "DL compressed" << "compression\n";
    for (const SweepRow& r : table.rows) {
      t << std::setw(11) << fixed(r.threshold, 2) << std::setw(16) << fixed(dl, 2);
      if (r.found) {
        t << std::setw(16) << fixed(r.report.dl_substructure + r.report.dl_compressed, 2)
          << fixed(r.report.compression, 2) << '\n';
      } else {
        t << "-\n";
      }
    }
    const SweepRow& best = table.rows[table.optimal];
    t << "optimal threshold " << fixed(best.threshold, 2) << " compression "
      << fixed(best.report.compression, 4) << '\n';
    emit(a.out, t.str(), out);
    return kExitOk;
  }
  Json j;
  j["input"] = graph_summary(g);
  j["params"] = params_json(params);
  j["params"].erase("threshold");
  j["sweep"] = sweep_json(table, dl);
  emit(a.out, dump(j), out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Substructure discovery by minimum description length", "subdue"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  EncodeArgs enc;
  CLI::App* encode = app.add_subcommand("encode", "Description length of a graph");
  encode->add_option("graph", enc.graph, "Graph file")->required();
  encode->add_option("--label-count", enc.label_count, "Override the number of unique labels")
      ->check(CLI::PositiveNumber);
  add_output(encode, enc.out);

  MatchArgs mat;
  CLI::App* match = app.add_subcommand("match", "Least-cost inexact match between two graphs");
  match->add_option("g1", mat.g1, "First graph")->required();
  match->add_option("g2", mat.g2, "Second graph")->required();
  add_costs(match, mat.costs);
  add_budget(match, mat.node_factor, mat.node_limit);
  add_output(match, mat.out);

  DiscoverArgs dis;
  CLI::App* disc = app.add_subcommand("discover", "Beam search for compressing substructures");
  disc->add_option("graph", dis.graph, "Graph file")->required();
  add_search(disc, dis.search, true);
  add_output(disc, dis.out);

  CompressArgs com;
  CLI::App* comp = app.add_subcommand("compress", "Discover and contract substructures repeatedly");
  comp->add_option("graph", com.graph, "Graph file")->required();
  add_search(comp, com.search, true);
  comp->add_option("--graph-out", com.graph_out, "Write the final compressed graph here");
  add_output(comp, com.out);

  GenerateArgs gen;
  CLI::App* genr = app.add_subcommand("generate", "Artificial graphs with embedded substructures");
  genr->add_option("--sub", gen.subs, "Substructure graph file (repeatable in suite mode)");
  genr->add_option("--sub-name", gen.sub_names, "Built-in substructure (s4e4, s5e6, s6e7, s8e9)");
  genr->add_flag("--suite", gen.suite, "Full 2x2x2x3 design per substructure");
  genr->add_option("--factor", gen.factor, "Graph size / substructure size")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000}))
      ->capture_default_str();
  genr->add_option("--labels", gen.labels, "Label pool factor")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000}))
      ->capture_default_str();
  genr->add_option("--ext", gen.ext, "External connections per instance")->capture_default_str();
  genr->add_option("--coverage", gen.coverage, "Fraction of the graph covered by instances")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  genr->add_option("--distort", gen.distort, "Distortions per instance")->capture_default_str();
  genr->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  genr->add_option("--out", gen.dir, "Output directory")->required();
  genr->add_option("--format", gen.out.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  genr->add_option("--report", gen.out.path, "Write the report to this file instead of stdout");

  SweepArgs swp;
  CLI::App* sweep = app.add_subcommand("sweep", "Compression across match thresholds");
  sweep->add_option("graph", swp.graph, "Graph file")->required();
  add_search(sweep, swp.search, false);
  sweep->add_option("--thresholds", swp.thresholds, "Comma-separated thresholds")
      ->capture_default_str();
  add_output(sweep, swp.out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*encode) return do_encode(enc, out);
    if (*match) return do_match(mat, out);
    if (*disc) return do_discover(dis, out);
    if (*comp) return do_compress(com, out);
    if (*genr) return do_generate(gen, out);
    if (*sweep) return do_sweep(swp, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}

}  // namespace subdue::cli

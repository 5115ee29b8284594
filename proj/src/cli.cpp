#include "peaknet/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "peaknet/analysis.hpp"
#include "peaknet/community.hpp"
#include "peaknet/corpus.hpp"
#include "peaknet/error.hpp"
#include "peaknet/io.hpp"
#include "peaknet/models.hpp"
#include "peaknet/stats.hpp"
#include "peaknet/sweep.hpp"

namespace peaknet {
namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

struct Artifact {
  std::string filename;
  std::string content;
};

struct InputOptions {
  std::string scenes;
  std::string aliases;
  std::string out;
};

struct PivotOptions {
  std::optional<std::size_t> index;
  std::optional<std::string> name;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Re-raises parse errors with the file name in front of the line number.
template <typename Fn>
auto with_file_context(const std::string& path, Fn&& fn) {
  try {
    return fn(read_file(path));
  } catch (const ParseError& e) {
    throw Error(path + ":" + e.what());
  }
}

struct LoadedNetwork {
  ChronoMultigraph graph;
  AliasMap aliases;
  std::size_t duplicates = 0;
};

LoadedNetwork load_network(const InputOptions& in) {
  LoadedNetwork net;
  if (!in.aliases.empty()) {
    net.aliases = with_file_context(in.aliases, [](const std::string& t) { return parse_aliases(t); });
  }
  auto parsed = with_file_context(in.scenes, [&](const std::string& t) {
    return parse_scenes(t, fs::path(in.scenes).filename().string());
  });
  net.duplicates = parsed.duplicate_count;
  net.graph = build_network(resolve_aliases(parsed.sequence, net.aliases));
  return net;
}

std::vector<std::string> load_name_list(const std::string& path, const AliasMap& aliases) {
  auto names = with_file_context(path, [](const std::string& t) { return parse_name_list(t); });
  for (auto& n : names) n = aliases.resolve(n);
  return names;
}

std::optional<SplitSpec> resolve_pivot(const PivotOptions& p, const LoadedNetwork& net) {
  if (p.name) return SplitSpec{net.graph.id_of(net.aliases.resolve(*p.name))};
  if (p.index) return SplitSpec{*p.index};
  return std::nullopt;
}

void write_artifacts(const std::string& dir, const std::vector<Artifact>& artifacts) {
  std::vector<fs::path> written;
  try {
    fs::create_directories(dir);
    for (const auto& a : artifacts) {
      const auto path = fs::path(dir) / a.filename;
      std::ofstream f(path, std::ios::binary | std::ios::trunc);
      if (!f) throw Error("cannot write '" + path.string() + "'");
      written.push_back(path);
      f << a.content;
      f.close();
      if (!f) throw Error("write failed for '" + path.string() + "'");
    }
  } catch (const fs::filesystem_error& e) {
    for (const auto& p : written) fs::remove(p);
    throw Error(std::string("output directory: ") + e.what());
  } catch (...) {
    for (const auto& p : written) {
      std::error_code ec;
      fs::remove(p, ec);
    }
    throw;
  }
}

std::vector<Artifact> graph_artifacts(const ChronoMultigraph& g, const std::string& stem) {
  return {
      {stem + ".graphml", to_graphml(g, Weighting::weighted)},
      {stem + ".dot", to_dot(g, Weighting::weighted)},
      {stem + "_simple.graphml", to_graphml(g, Weighting::binary)},
      {stem + "_simple.dot", to_dot(g, Weighting::binary)},
  };
}

ordered_json names_json(const ChronoMultigraph& g, const std::vector<NodeId>& ids) {
  ordered_json j = ordered_json::array();
  for (const auto u : ids) j.push_back(g.node(u).name);
  return j;
}

double median(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  const auto n = v.size();
  if (n == 0) return 0.0;
  return n % 2 == 1 ? static_cast<double>(v[n / 2])
                    : (static_cast<double>(v[n / 2 - 1]) + static_cast<double>(v[n / 2])) / 2.0;
}

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (const double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// ---- subcommands ----

std::vector<Artifact> cmd_build(const InputOptions& in) {
  const auto net = load_network(in);
  auto artifacts = graph_artifacts(net.graph, "network");
  artifacts.push_back({"adjacency.csv", adjacency_csv(net.graph, Weighting::weighted)});
  artifacts.push_back({"adjacency_simple.csv", adjacency_csv(net.graph, Weighting::binary)});
  return artifacts;
}

std::vector<Artifact> cmd_stats(const InputOptions& in, std::size_t k, const PivotOptions& pivot) {
  const auto net = load_network(in);
  const auto& g = net.graph;
  const auto everyone = [&] {
    std::vector<NodeId> ids(g.node_count());
    for (NodeId u = 0; u < ids.size(); ++u) ids[u] = u;
    return ids;
  }();

  auto j = artifact_header("stats");
  j["source"] = fs::path(in.scenes).filename().string();
  j["nodes"] = g.node_count();
  j["edges"] = g.edge_count();
  j["total_multiplicity"] = g.total_multiplicity();
  j["duplicate_mentions"] = net.duplicates;
  j["density"] = density(g, everyone, everyone);
  j["components"] = connected_components(g).size();
  j["assortativity"] = optional_number(assortativity(g));
  ordered_json degrees = ordered_json::array();
  for (const auto& n : g.nodes()) {
    degrees.push_back({{"name", n.name},
                       {"degree", g.degree(n.appearance_index, Weighting::binary)},
                       {"weighted_degree", g.degree(n.appearance_index, Weighting::weighted)},
                       {"scene_count", n.scene_count}});
  }
  j["degrees"] = std::move(degrees);
  const auto top = top_k(g, k);
  j["top_k"] = to_json(top);
  if (const auto spec = resolve_pivot(pivot, net)) j["split"] = to_json(dce_report(g, *spec));
  return {{"stats.json", format_json(j)}, {"top_k.csv", top_k_csv(top)}};
}

std::vector<Artifact> cmd_ccdf(const InputOptions& in, bool weighted) {
  const auto net = load_network(in);
  const auto d = degree_distribution(net.graph, weighted ? Weighting::weighted : Weighting::binary);
  return {{"ccdf.csv", ccdf_csv(d)}};
}

std::vector<Artifact> cmd_cluster(const InputOptions& in, bool binary, double resolution,
                                  std::uint64_t seed, std::size_t restarts,
                                  const std::string& remove_list) {
  const auto net = load_network(in);
  ChronoMultigraph g = net.graph;
  if (!remove_list.empty()) {
    const auto names = load_name_list(remove_list, net.aliases);
    g = remove_nodes(g, names);
  }
  const Weighting w = binary ? Weighting::binary : Weighting::weighted;
  const auto result = louvain(g, LouvainOptions{w, resolution, seed, restarts});
  const auto& p = result.partition;

  auto j = artifact_header("cluster");
  j["source"] = fs::path(in.scenes).filename().string();
  j["weighting"] = binary ? "binary" : "weighted";
  j["resolution"] = resolution;
  j["seed"] = seed;
  j["restarts"] = restarts;
  j["nodes"] = g.node_count();
  j["communities"] = p.community_count;
  j["modularity"] = p.modularity;
  j["pass_modularity"] = result.pass_modularity;
  ordered_json members = ordered_json::array();
  for (std::size_t c = 0; c < p.community_count; ++c) {
    std::vector<NodeId> ids;
    for (NodeId u = 0; u < g.node_count(); ++u) {
      if (p.assignment[u] == c) ids.push_back(u);
    }
    members.push_back(names_json(g, ids));
  }
  j["members"] = std::move(members);
  return {{"partition.csv", partition_csv(g, p)},
          {"partition.dot", to_dot(g, w, &p)},
          {"cluster.json", format_json(j)}};
}

std::vector<Artifact> cmd_dce(const InputOptions& in, const PivotOptions& pivot, double theta) {
  const auto net = load_network(in);
  const auto& g = net.graph;
  std::optional<PivotScan> scan;
  if (g.node_count() >= 4) scan = scan_pivot(g);
  auto spec = resolve_pivot(pivot, net);
  std::string pivot_source = "explicit";
  if (!spec) {
    if (!scan) throw ParamError("dce: need an explicit pivot for graphs under 4 nodes");
    spec = SplitSpec{scan->best_pivot};
    pivot_source = "scan";
  }
  const auto report = dce_report(g, *spec, DceThresholds{theta});

  auto j = artifact_header("dce");
  j["source"] = fs::path(in.scenes).filename().string();
  j["pivot_source"] = pivot_source;
  j["pivot_name"] = g.node(spec->pivot_index).name;
  if (scan) {
    j["scan_best_pivot"] = scan->best_pivot;
  } else {
    j["scan_best_pivot"] = nullptr;
  }
  j["report"] = to_json(report);
  std::vector<Artifact> out{{"dce.json", format_json(j)}};
  if (scan) out.push_back({"pivot_scan.csv", pivot_scan_csv(*scan)});
  return out;
}

std::vector<Artifact> cmd_prune(const InputOptions& in, const PivotOptions& pivot) {
  const auto net = load_network(in);
  const auto spec = resolve_pivot(pivot, net);
  const auto pruned = prune_single_scene(net.graph, spec);

  auto j = artifact_header("prune");
  j["source"] = fs::path(in.scenes).filename().string();
  j["nodes_before"] = net.graph.node_count();
  j["nodes_after"] = pruned.graph.node_count();
  j["removed"] = pruned.removed;
  if (spec) {
    j["pivot_index"] = spec->pivot_index;
    j["removed_core"] = pruned.removed_core;
    j["removed_periphery"] = pruned.removed_periphery;
    j["collapse"] = to_json(collapse_experiment(net.graph, *spec));
  }
  auto artifacts = graph_artifacts(pruned.graph, "pruned");
  artifacts.push_back({"prune.json", format_json(j)});
  return artifacts;
}

std::vector<Artifact> cmd_remove(const InputOptions& in, const std::string& remove_list) {
  const auto net = load_network(in);
  const auto names = load_name_list(remove_list, net.aliases);
  const auto r = removal_experiment(net.graph, names);

  auto j = artifact_header("remove");
  j["source"] = fs::path(in.scenes).filename().string();
  j["removed"] = names;
  j["nodes_after"] = r.remaining.node_count();
  j["edges_after"] = r.remaining.edge_count();
  j["component_count"] = r.components.size();
  ordered_json comps = ordered_json::array();
  for (const auto& c : r.components) comps.push_back(names_json(r.remaining, c));
  j["components"] = std::move(comps);
  j["isolated"] = r.isolated;
  j["central_node"] = r.central_node;
  auto artifacts = graph_artifacts(r.remaining, "remaining");
  artifacts.push_back({"removal.json", format_json(j)});
  return artifacts;
}

struct SimulateOptions {
  std::string model;
  std::string out;
  std::size_t n = 200;
  double p = 0.1;
  std::size_t m = 4;
  std::size_t core_n = 30;
  std::size_t periphery_n = 30;
  double core_p = 0.3;
  double bias = 0.9;
  std::uint64_t seed = 1;
  std::size_t seeds = 1;
  double theta = DceThresholds{}.theta;
  std::size_t threads = 0;
};

struct SeedResult {
  ordered_json row;
  DegreeDistribution dist;
  double mean_degree = 0.0;
  double median_degree = 0.0;
  std::optional<double> assortativity;
  std::size_t edges = 0;
  std::optional<LogLogFit> fit;
  bool verdict = false;
  bool pivot_recovered = false;
  std::optional<double> core_assortativity;
};

SeedResult simulate_one(const SimulateOptions& o, std::uint64_t seed) {
  ChronoMultigraph g;
  if (o.model == "er") {
    g = generate_er(ErParams{o.n, o.p, seed});
  } else if (o.model == "ba") {
    g = generate_ba(BaParams{o.n, o.m, seed});
  } else {
    g = generate_spliced(SplicedParams{o.core_n, o.periphery_n, o.core_p, o.m, o.bias, seed});
  }
  SeedResult r;
  r.dist = degree_distribution(g, Weighting::binary);
  r.edges = g.edge_count();
  r.mean_degree = 2.0 * static_cast<double>(r.edges) / static_cast<double>(g.node_count());
  r.median_degree = median(r.dist.degrees);
  r.assortativity = assortativity(g);

  auto& row = r.row;
  row["seed"] = seed;
  row["nodes"] = g.node_count();
  row["edges"] = r.edges;
  row["mean_degree"] = r.mean_degree;
  row["median_degree"] = r.median_degree;
  row["max_degree"] = r.dist.max_degree();
  row["assortativity"] = optional_number(r.assortativity);
  if (o.model == "ba") {
    r.fit = fit_loglog_ccdf(r.dist, 8, 100);
    if (r.fit) {
      row["ccdf_fit"] = {{"slope", r.fit->slope}, {"r_squared", r.fit->r_squared},
                         {"points", r.fit->points}};
    } else {
      row["ccdf_fit"] = nullptr;
    }
  }
  if (o.model == "spliced") {
    const SplitSpec spec{o.core_n - 1};
    const auto report = dce_report(g, spec, DceThresholds{o.theta});
    r.verdict = report.verdict;
    r.core_assortativity = report.assortativity_core;
    row["dce"] = to_json(report);
    if (g.node_count() >= 4) {
      const auto best = scan_pivot(g).best_pivot;
      r.pivot_recovered = best == spec.pivot_index;
      row["scan_best_pivot"] = best;
    }
    if (o.periphery_n > 0) row["collapse"] = to_json(collapse_experiment(g, spec));
  }
  return r;
}

std::vector<Artifact> cmd_simulate(const SimulateOptions& o) {
  if (o.seeds == 0) throw ParamError("--seeds must be positive");
  if (o.model == "er") validate(ErParams{o.n, o.p, 0});
  if (o.model == "ba") validate(BaParams{o.n, o.m, 0});
  if (o.model == "spliced") {
    validate(SplicedParams{o.core_n, o.periphery_n, o.core_p, o.m, o.bias, 0});
  }
  const auto threads = o.threads == 0 ? default_threads() : o.threads;
  const auto results = parallel_map(o.seeds, threads, [&](std::size_t i) {
    return simulate_one(o, o.seed + i);
  });

  auto j = artifact_header("simulate");
  j["model"] = o.model;
  ordered_json params;
  if (o.model == "er") {
    params = {{"n", o.n}, {"p", o.p}};
  } else if (o.model == "ba") {
    params = {{"n", o.n}, {"m", o.m}};
  } else {
    params = {{"core_n", o.core_n}, {"periphery_n", o.periphery_n}, {"core_p", o.core_p},
              {"m", o.m},           {"bias", o.bias},               {"theta", o.theta}};
  }
  params["seed"] = o.seed;
  params["seeds"] = o.seeds;
  j["params"] = std::move(params);

  std::vector<double> means, medians, edges, assort, abs_assort, slopes, r2s, core_assort;
  std::size_t undefined = 0, verdicts = 0, recovered = 0;
  std::size_t max_x = 0;
  for (const auto& r : results) {
    means.push_back(r.mean_degree);
    medians.push_back(r.median_degree);
    edges.push_back(static_cast<double>(r.edges));
    if (r.assortativity) {
      assort.push_back(*r.assortativity);
      abs_assort.push_back(std::abs(*r.assortativity));
    } else {
      ++undefined;
    }
    if (r.fit) {
      slopes.push_back(r.fit->slope);
      r2s.push_back(r.fit->r_squared);
    }
    if (r.core_assortativity) core_assort.push_back(*r.core_assortativity);
    verdicts += r.verdict;
    recovered += r.pivot_recovered;
    max_x = std::max(max_x, r.dist.max_degree());
  }
  const double count = static_cast<double>(results.size());
  ordered_json agg;
  agg["mean_degree"] = mean_of(means);
  agg["median_degree"] = mean_of(medians);
  agg["mean_edges"] = mean_of(edges);
  agg["mean_assortativity"] = assort.empty() ? ordered_json(nullptr) : ordered_json(mean_of(assort));
  agg["mean_abs_assortativity"] =
      abs_assort.empty() ? ordered_json(nullptr) : ordered_json(mean_of(abs_assort));
  agg["undefined_assortativity"] = undefined;
  if (o.model == "ba") {
    agg["mean_ccdf_slope"] = slopes.empty() ? ordered_json(nullptr) : ordered_json(mean_of(slopes));
    agg["mean_ccdf_r_squared"] = r2s.empty() ? ordered_json(nullptr) : ordered_json(mean_of(r2s));
  }
  if (o.model == "spliced") {
    agg["verdict_rate"] = static_cast<double>(verdicts) / count;
    agg["pivot_recovery_rate"] = static_cast<double>(recovered) / count;
    agg["mean_core_assortativity"] =
        core_assort.empty() ? ordered_json(nullptr) : ordered_json(mean_of(core_assort));
  }
  j["aggregate"] = std::move(agg);
  ordered_json rows = ordered_json::array();
  for (const auto& r : results) rows.push_back(r.row);
  j["per_seed"] = std::move(rows);

  // Seed-averaged CCDF for plotting.
  std::string csv = std::string("# peaknet ") + kToolVersion + "\nx,p\n";
  for (std::size_t x = 0; x <= max_x; ++x) {
    double s = 0.0;
    for (const auto& r : results) s += r.dist.ccdf_at(x);
    csv += std::to_string(x) + "," + format_decimal(s / count) + "\n";
  }
  return {{"simulate.json", format_json(j)}, {"ccdf_mean.csv", csv}};
}

void add_input_options(CLI::App* sub, InputOptions& in) {
  sub->add_option("--scenes", in.scenes, "Scenes file (one scene per line, names separated by '|')")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--aliases", in.aliases, "Alias file ('alias => canonical' per line)")
      ->check(CLI::ExistingFile);
  sub->add_option("--out", in.out, "Output directory")->required();
}

void add_pivot_options(CLI::App* sub, PivotOptions& p) {
  auto* idx = sub->add_option("--pivot", p.index, "Pivot appearance index (0-based, in the core)");
  auto* name = sub->add_option("--pivot-name", p.name, "Pivot character name");
  idx->excludes(name);
  name->excludes(idx);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"peaknet: character co-occurrence network analysis", "peaknet"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  InputOptions in;
  PivotOptions pivot;
  std::size_t top = 5;
  bool weighted = false;
  bool binary = false;
  double resolution = 1.0;
  std::uint64_t seed = 1;
  std::size_t restarts = LouvainOptions{}.restarts;
  std::string remove_list;
  double theta = DceThresholds{}.theta;
  SimulateOptions sim;

  auto* build = app.add_subcommand("build", "Build the network; export GraphML, DOT and CSV matrices");
  add_input_options(build, in);

  auto* stats = app.add_subcommand("stats", "Degree, density, top-k and assortativity report");
  add_input_options(stats, in);
  stats->add_option("--top-k", top, "Number of top nodes and links")->check(CLI::PositiveNumber);
  add_pivot_options(stats, pivot);

  auto* ccdf = app.add_subcommand("ccdf", "Degree CCDF as CSV");
  add_input_options(ccdf, in);
  ccdf->add_flag("--weighted", weighted, "Use multiplicity-weighted degrees");

  auto* cluster = app.add_subcommand("cluster", "Louvain communities");
  add_input_options(cluster, in);
  cluster->add_flag("--binary", binary, "Ignore multiplicities");
  cluster->add_option("--resolution", resolution, "Modularity resolution")->check(CLI::PositiveNumber);
  cluster->add_option("--seed", seed, "Visit-order seed")->envname("PEAKNET_SEED");
  cluster->add_option("--restarts", restarts, "Louvain runs; the best modularity is kept")
      ->check(CLI::PositiveNumber);
  cluster->add_option("--remove-list", remove_list, "Names to remove before clustering")
      ->check(CLI::ExistingFile);

  auto* dce = app.add_subcommand("dce", "Core-periphery report at a pivot, plus pivot scan");
  add_input_options(dce, in);
  add_pivot_options(dce, pivot);
  dce->add_option("--theta", theta, "Assortativity threshold")->check(CLI::Range(0.0, 1.0));

  auto* prune = app.add_subcommand("prune", "Remove characters seen in a single scene");
  add_input_options(prune, in);
  add_pivot_options(prune, pivot);

  auto* remove = app.add_subcommand("remove", "Remove listed characters and report connectivity");
  add_input_options(remove, in);
  remove->add_option("--remove-list", remove_list, "Names to remove, one per line")
      ->required()
      ->check(CLI::ExistingFile);

  auto* simulate = app.add_subcommand("simulate", "Random-graph sweeps over seeds");
  simulate->add_option("model", sim.model, "er | ba | spliced")
      ->required()
      ->check(CLI::IsMember({"er", "ba", "spliced"}));
  simulate->add_option("--out", sim.out, "Output directory")->required();
  simulate->add_option("--n", sim.n, "Node count (er, ba)");
  simulate->add_option("--p", sim.p, "Edge probability (er)");
  auto* m_opt = simulate->add_option("--m", sim.m, "Links per new node (ba: 4, spliced: 2)");
  simulate->add_option("--core-n", sim.core_n, "Core size (spliced)");
  simulate->add_option("--periphery-n", sim.periphery_n, "Periphery size (spliced)");
  simulate->add_option("--core-p", sim.core_p, "Core edge probability (spliced)");
  simulate->add_option("--bias", sim.bias, "Probability a periphery link targets the core");
  simulate->add_option("--theta", sim.theta, "Assortativity threshold for the spliced verdict");
  simulate->add_option("--seed", sim.seed, "First seed")->envname("PEAKNET_SEED");
  simulate->add_option("--seeds", sim.seeds, "Number of consecutive seeds");
  simulate->add_option("--threads", sim.threads, "Worker threads (0 = auto)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == static_cast<int>(CLI::ExitCodes::Success) ? 0 : 2;
  }

  try {
    std::vector<Artifact> artifacts;
    std::string out_dir = in.out;
    if (build->parsed()) {
      artifacts = cmd_build(in);
    } else if (stats->parsed()) {
      artifacts = cmd_stats(in, top, pivot);
    } else if (ccdf->parsed()) {
      artifacts = cmd_ccdf(in, weighted);
    } else if (cluster->parsed()) {
      artifacts = cmd_cluster(in, binary, resolution, seed, restarts, remove_list);
    } else if (dce->parsed()) {
      artifacts = cmd_dce(in, pivot, theta);
    } else if (prune->parsed()) {
      artifacts = cmd_prune(in, pivot);
    } else if (remove->parsed()) {
      artifacts = cmd_remove(in, remove_list);
    } else if (simulate->parsed()) {
      if (sim.model == "spliced" && m_opt->count() == 0) sim.m = SplicedParams{}.m;
      artifacts = cmd_simulate(sim);
      out_dir = sim.out;
    }
    write_artifacts(out_dir, artifacts);
    for (const auto& a : artifacts) out << (fs::path(out_dir) / a.filename).string() << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << "peaknet: error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace peaknet

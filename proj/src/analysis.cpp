#include "peaknet/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "peaknet/error.hpp"

namespace peaknet {
namespace {

// Maximised Bernoulli log-likelihood of `edges` present among `pairs`.
double block_log_likelihood(std::size_t edges, std::size_t pairs) {
  if (pairs == 0 || edges == 0 || edges == pairs) return 0.0;
  const double d = static_cast<double>(edges) / static_cast<double>(pairs);
  return static_cast<double>(pairs) * (d * std::log(d) + (1.0 - d) * std::log1p(-d));
}

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::size_t choose2(std::size_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

}  // namespace

SplitResult split(const ChronoMultigraph& g, SplitSpec spec) {
  const std::size_t n = g.node_count();
  if (spec.pivot_index >= n) {
    throw ParamError("pivot index " + std::to_string(spec.pivot_index) + " out of range for " +
                     std::to_string(n) + " nodes");
  }
  SplitResult out;
  for (NodeId u = 0; u < n; ++u) {
    (u <= spec.pivot_index ? out.core_nodes : out.periphery_nodes).push_back(u);
  }
  for (const auto& e : g.edges()) {
    const bool u_core = e.u <= spec.pivot_index;
    const bool v_core = e.v <= spec.pivot_index;
    auto bump = [&](std::size_t BlockCounts::*field) {
      ++(out.simple_edges.*field);
      out.multiplicity.*field += e.multiplicity;
    };
    if (u_core && v_core) {
      bump(&BlockCounts::core);
    } else if (!u_core && !v_core) {
      bump(&BlockCounts::periphery);
    } else {
      bump(&BlockCounts::cross);
    }
  }
  out.core = induced_subgraph(g, out.core_nodes);
  return out;
}

DceReport dce_report(const ChronoMultigraph& g, SplitSpec spec, const DceThresholds& thresholds) {
  const auto s = split(g, spec);
  DceReport r;
  r.pivot_index = spec.pivot_index;
  r.core_size = s.core_nodes.size();
  r.periphery_size = s.periphery_nodes.size();
  r.density_core = density(g, s.core_nodes, s.core_nodes);
  r.density_periphery = density(g, s.periphery_nodes, s.periphery_nodes);
  r.density_cross = density(g, s.core_nodes, s.periphery_nodes);
  r.edges_full = g.edge_count();
  r.edges_core = s.simple_edges.core;
  if (r.edges_core > 0) r.edge_scaling = ratio(r.edges_full, r.edges_core);
  r.assortativity_full = assortativity(g);
  r.assortativity_core = assortativity(s.core);
  r.theta = thresholds.theta;

  const bool ordered = r.density_core > r.density_cross && r.density_cross > r.density_periphery;
  const bool full_negative = r.assortativity_full && *r.assortativity_full < -thresholds.theta;
  const bool core_neutral = r.assortativity_core && std::abs(*r.assortativity_core) < thresholds.theta;
  r.verdict = r.core_size > 0 && r.periphery_size > 0 && ordered && full_negative && core_neutral;
  return r;
}

PivotScan scan_pivot(const ChronoMultigraph& g) {
  const std::size_t n = g.node_count();
  if (n < 4) throw ParamError("scan_pivot needs at least 4 nodes");

  // Start with pivot 0 and move one node at a time from periphery to core.
  std::size_t core_edges = 0;
  std::size_t cross_edges = g.degree(0, Weighting::binary);
  std::size_t periphery_edges = g.edge_count() - cross_edges;

  PivotScan scan;
  double best = 0.0;
  for (std::size_t pivot = 1; pivot + 1 < n; ++pivot) {
    for (const auto& [v, m] : g.neighbors(pivot)) {
      if (v < pivot) {
        ++core_edges;
        --cross_edges;
      } else {
        --periphery_edges;
        ++cross_edges;
      }
    }
    const std::size_t k = pivot + 1;
    const std::size_t rest = n - k;
    PivotScore ps;
    ps.pivot = pivot;
    ps.score = block_log_likelihood(core_edges, choose2(k)) +
               block_log_likelihood(periphery_edges, choose2(rest)) +
               block_log_likelihood(cross_edges, k * rest);
    ps.density_contrast = ratio(core_edges, choose2(k)) - ratio(periphery_edges, choose2(rest));
    if (scan.scores.empty() || ps.score > best + 1e-12 * std::max(1.0, std::abs(best))) {
      best = ps.score;
      scan.best_pivot = pivot;
    }
    scan.scores.push_back(ps);
  }
  return scan;
}

PruneResult prune_single_scene(const ChronoMultigraph& g, std::optional<SplitSpec> spec) {
  if (spec && spec->pivot_index >= g.node_count()) {
    throw ParamError("pivot index " + std::to_string(spec->pivot_index) + " out of range");
  }
  PruneResult out;
  std::vector<NodeId> keep;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const auto& node = g.node(u);
    if (node.scene_count != 1) {
      keep.push_back(u);
      continue;
    }
    out.removed.push_back(node.name);
    if (spec) {
      (u <= spec->pivot_index ? out.removed_core : out.removed_periphery).push_back(node.name);
    }
  }
  out.graph = induced_subgraph(g, keep);
  return out;
}

ChronoMultigraph remove_nodes(const ChronoMultigraph& g, std::span<const std::string> names) {
  std::set<NodeId> drop;
  std::vector<std::string> unknown;
  for (const auto& name : names) {
    if (const auto id = g.find(name)) {
      drop.insert(*id);
    } else {
      unknown.push_back(name);
    }
  }
  if (!unknown.empty()) {
    std::string msg = "unknown node(s):";
    for (const auto& name : unknown) msg += " '" + name + "'";
    throw LookupError(msg);
  }
  std::vector<NodeId> keep;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (drop.count(u) == 0) keep.push_back(u);
  }
  return induced_subgraph(g, keep);
}

double distribution_distance(const DegreeDistribution& a, const DegreeDistribution& b) {
  if (a.degrees.empty() || b.degrees.empty()) {
    throw ParamError("distribution_distance: empty distribution");
  }
  const std::size_t top = std::max(a.max_degree(), b.max_degree());
  double worst = 0.0;
  for (std::size_t x = 0; x <= top; ++x) {
    worst = std::max(worst, std::abs(a.ccdf_at(x) - b.ccdf_at(x)));
  }
  return worst;
}

CollapseReport collapse_experiment(const ChronoMultigraph& g, SplitSpec spec) {
  const auto s = split(g, spec);
  const auto core_dist = degree_distribution(s.core, Weighting::binary);

  CollapseReport r;
  r.distance_full = distribution_distance(degree_distribution(g, Weighting::binary), core_dist);
  const auto pruned = prune_single_scene(g).graph;
  r.pruned_nodes = pruned.node_count();
  if (pruned.node_count() == 0) return r;
  r.distance_pruned = distribution_distance(degree_distribution(pruned, Weighting::binary), core_dist);

  r.removed_hub = top_k(pruned, 1).top_nodes.front().name;
  const std::string hub[] = {r.removed_hub};
  const auto collapsed = remove_nodes(pruned, hub);
  if (collapsed.node_count() > 0) {
    r.distance_collapsed =
        distribution_distance(degree_distribution(collapsed, Weighting::binary), core_dist);
  }
  return r;
}

RemovalReport removal_experiment(const ChronoMultigraph& g, std::span<const std::string> names) {
  RemovalReport r;
  r.remaining = remove_nodes(g, names);
  r.components = connected_components(r.remaining);
  const std::vector<NodeId>* largest = nullptr;
  for (const auto& comp : r.components) {
    if (comp.size() == 1 && r.remaining.degree(comp.front(), Weighting::binary) == 0) {
      r.isolated.push_back(r.remaining.node(comp.front()).name);
    }
    if (largest == nullptr || comp.size() > largest->size()) largest = &comp;
  }
  if (largest != nullptr) {
    NodeId best = largest->front();
    for (const auto u : *largest) {
      if (r.remaining.degree(u, Weighting::binary) > r.remaining.degree(best, Weighting::binary)) {
        best = u;
      }
    }
    r.central_node = r.remaining.node(best).name;
  }
  return r;
}

}  // namespace peaknet

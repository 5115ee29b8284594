#include "peaknet/community.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "peaknet/error.hpp"
#include "peaknet/random.hpp"

namespace peaknet {
namespace {

// Weighted graph used inside Louvain levels. Aggregated nodes carry their
// internal weight as a self term (A_ii, counting both orientations).
struct LevelGraph {
  std::vector<std::vector<std::pair<std::size_t, double>>> adj;
  std::vector<double> self;
  std::vector<double> strength;  // k_i, including self
  double two_m = 0.0;

  std::size_t size() const { return adj.size(); }
};

LevelGraph level_from(const ChronoMultigraph& g, Weighting w) {
  LevelGraph lg;
  const std::size_t n = g.node_count();
  lg.adj.resize(n);
  lg.self.assign(n, 0.0);
  lg.strength.assign(n, 0.0);
  for (NodeId u = 0; u < n; ++u) {
    for (const auto& [v, mult] : g.neighbors(u)) {
      const double weight = w == Weighting::weighted ? static_cast<double>(mult) : 1.0;
      lg.adj[u].emplace_back(v, weight);
      lg.strength[u] += weight;
    }
    lg.two_m += lg.strength[u];
  }
  return lg;
}

LevelGraph aggregate(const LevelGraph& lg, const std::vector<std::size_t>& comm, std::size_t count) {
  LevelGraph out;
  out.adj.resize(count);
  out.self.assign(count, 0.0);
  out.strength.assign(count, 0.0);
  out.two_m = lg.two_m;
  std::vector<std::map<std::size_t, double>> links(count);
  for (std::size_t i = 0; i < lg.size(); ++i) {
    const auto ci = comm[i];
    out.self[ci] += lg.self[i];
    out.strength[ci] += lg.strength[i];
    for (const auto& [j, weight] : lg.adj[i]) {
      const auto cj = comm[j];
      if (ci == cj) {
        out.self[ci] += weight;
      } else {
        links[ci][cj] += weight;
      }
    }
  }
  for (std::size_t c = 0; c < count; ++c) {
    out.adj[c].assign(links[c].begin(), links[c].end());
  }
  return out;
}

// Moves nodes between communities until a full sweep changes nothing.
// Returns whether any node moved. Gains are compared scaled by 2m so that
// integer weights stay exact.
bool local_moving(const LevelGraph& lg, std::vector<std::size_t>& comm, double resolution, Rng& rng) {
  const std::size_t n = lg.size();
  std::vector<double> total(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) total[comm[i]] += lg.strength[i];

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  rng.shuffle(order);

  std::vector<double> link_to(n, 0.0);
  std::vector<std::size_t> touched;
  bool any_move = false;
  bool moved = true;
  while (moved) {
    moved = false;
    for (const auto i : order) {
      const auto home = comm[i];
      const double k_i = lg.strength[i];
      touched.clear();
      touched.push_back(home);
      for (const auto& [j, weight] : lg.adj[i]) {
        const auto c = comm[j];
        if (std::find(touched.begin(), touched.end(), c) == touched.end()) {
          touched.push_back(c);
        }
        link_to[c] += weight;
      }

      total[home] -= k_i;
      auto gain = [&](std::size_t c) {
        return link_to[c] * lg.two_m - resolution * total[c] * k_i;
      };
      auto best = home;
      double best_gain = gain(home);
      for (const auto c : touched) {
        const double g = gain(c);
        if (g > best_gain) {
          best_gain = g;
          best = c;
        }
      }
      total[best] += k_i;
      comm[i] = best;
      if (best != home) moved = any_move = true;
      for (const auto c : touched) link_to[c] = 0.0;
    }
  }
  return any_move;
}

LouvainResult louvain_once(const ChronoMultigraph& g, const LouvainOptions& options, Rng& rng) {
  LevelGraph level = level_from(g, options.weighting);

  std::vector<std::size_t> membership(g.node_count());
  std::iota(membership.begin(), membership.end(), std::size_t{0});

  LouvainResult result;
  result.pass_modularity.push_back(
      *modularity(g, membership, options.weighting, options.resolution));

  while (true) {
    std::vector<std::size_t> comm(level.size());
    std::iota(comm.begin(), comm.end(), std::size_t{0});
    if (!local_moving(level, comm, options.resolution, rng)) break;
    const auto count = normalize_labels(comm);
    for (auto& c : membership) c = comm[c];
    result.pass_modularity.push_back(
        *modularity(g, membership, options.weighting, options.resolution));
    if (count == level.size()) break;
    level = aggregate(level, comm, count);
  }

  auto& p = result.partition;
  p.assignment = std::move(membership);
  p.community_count = normalize_labels(p.assignment);
  p.modularity = *modularity(g, p.assignment, options.weighting, options.resolution);
  return result;
}

}  // namespace

std::optional<double> modularity(const ChronoMultigraph& g, std::span<const std::size_t> assignment,
                                 Weighting w, double resolution) {
  if (assignment.size() != g.node_count()) {
    throw ParamError("modularity: assignment does not cover every node");
  }
  if (g.edge_count() == 0) return std::nullopt;
  std::map<std::size_t, double> inside;  // sum of A_ij over ordered pairs within c
  std::map<std::size_t, double> total;   // sum of k_i over c
  double two_m = 0.0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const auto c = assignment[u];
    for (const auto& [v, mult] : g.neighbors(u)) {
      const double weight = w == Weighting::weighted ? static_cast<double>(mult) : 1.0;
      two_m += weight;
      total[c] += weight;
      if (assignment[v] == c) inside[c] += weight;
    }
  }
  double q = 0.0;
  for (const auto& [c, tot] : total) {
    const auto it = inside.find(c);
    const double in = it == inside.end() ? 0.0 : it->second;
    q += in / two_m - resolution * (tot / two_m) * (tot / two_m);
  }
  return q;
}

std::size_t normalize_labels(std::vector<std::size_t>& assignment) {
  std::map<std::size_t, std::size_t> relabel;
  for (auto& c : assignment) {
    const auto [it, inserted] = relabel.emplace(c, relabel.size());
    c = it->second;
  }
  return relabel.size();
}

LouvainResult louvain(const ChronoMultigraph& g, const LouvainOptions& options) {
  if (g.edge_count() == 0) throw ParamError("no edges to cluster");
  if (!(options.resolution > 0.0) || !std::isfinite(options.resolution)) {
    throw ParamError("louvain: resolution must be positive");
  }
  if (options.restarts == 0) throw ParamError("louvain: restarts must be positive");
  Rng rng(options.seed);
  LouvainResult best;
  for (std::size_t run = 0; run < options.restarts; ++run) {
    auto result = louvain_once(g, options, rng);
    // a later run must win by more than rounding noise
    if (run == 0 || result.partition.modularity > best.partition.modularity + 1e-12) {
      best = std::move(result);
    }
  }
  return best;
}

}  // namespace peaknet

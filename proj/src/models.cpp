#include "peaknet/models.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "peaknet/error.hpp"
#include "peaknet/random.hpp"

namespace peaknet {
namespace {

bool is_probability(double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; }

ChronoMultigraph empty_graph(std::size_t n) {
  ChronoMultigraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_node("n" + std::to_string(i));
  return g;
}

// One scene per edge for both endpoints.
void add_pair_scene(ChronoMultigraph& g, NodeId u, NodeId v) {
  g.add_edge(u, v);
  g.add_scene(u);
  g.add_scene(v);
}

void fill_er(ChronoMultigraph& g, std::size_t n, double p, Rng& rng) {
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p)) add_pair_scene(g, i, j);
    }
  }
}

void finish_scene_counts(ChronoMultigraph& g) {
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (g.node(u).scene_count == 0) g.set_scene_count(u, 1);
  }
}

// Integer-weighted draw over ids [0, pool) with weight degree + 1.
NodeId draw_smoothed(const ChronoMultigraph& g, std::size_t pool, Rng& rng) {
  std::uint64_t total = 0;
  for (NodeId u = 0; u < pool; ++u) total += g.degree(u, Weighting::binary) + 1;
  std::uint64_t r = rng.below(total);
  for (NodeId u = 0; u < pool; ++u) {
    const std::uint64_t w = g.degree(u, Weighting::binary) + 1;
    if (r < w) return u;
    r -= w;
  }
  return pool - 1;  // unreachable
}

}  // namespace

void validate(const ErParams& params) {
  if (params.n < 1) throw ParamError("er: n must be >= 1");
  if (!is_probability(params.p)) throw ParamError("er: p must be in [0, 1]");
}

void validate(const BaParams& params) {
  if (params.m < 1) throw ParamError("ba: m must be >= 1");
  if (params.n <= params.m) throw ParamError("ba: n must exceed m");
}

void validate(const SplicedParams& params) {
  if (params.core_n < 1) throw ParamError("spliced: core_n must be >= 1");
  if (!is_probability(params.core_p)) throw ParamError("spliced: core_p must be in [0, 1]");
  if (!is_probability(params.bias)) throw ParamError("spliced: bias must be in [0, 1]");
  if (params.m < 1) throw ParamError("spliced: m must be >= 1");
  if (params.m > params.core_n) throw ParamError("spliced: m must not exceed core_n");
}

ChronoMultigraph generate_er(const ErParams& params) {
  validate(params);
  Rng rng(params.seed);
  auto g = empty_graph(params.n);
  fill_er(g, params.n, params.p, rng);
  finish_scene_counts(g);
  return g;
}

ChronoMultigraph generate_ba(const BaParams& params) {
  validate(params);
  Rng rng(params.seed);
  const std::size_t m = params.m;
  auto g = empty_graph(params.n);

  // Each node id appears once per incident edge, so a uniform pick from this
  // list is a degree-proportional pick.
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * (m * (m + 1) / 2 + (params.n - m - 1) * m));
  for (NodeId i = 0; i <= m; ++i) {
    for (NodeId j = i + 1; j <= m; ++j) {
      add_pair_scene(g, i, j);
      endpoints.push_back(i);
      endpoints.push_back(j);
    }
  }

  std::vector<NodeId> targets;
  for (NodeId v = m + 1; v < params.n; ++v) {
    targets.clear();
    while (targets.size() < m) {
      const NodeId t = endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    g.add_scene(v);
    for (const NodeId t : targets) {
      g.add_edge(v, t);
      g.add_scene(t);
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  finish_scene_counts(g);
  return g;
}

ChronoMultigraph generate_spliced(const SplicedParams& params) {
  validate(params);
  Rng rng(params.seed);
  const std::size_t total = params.core_n + params.periphery_n;
  auto g = empty_graph(total);
  fill_er(g, params.core_n, params.core_p, rng);

  std::vector<NodeId> targets;
  for (NodeId v = params.core_n; v < total; ++v) {
    targets.clear();
    while (targets.size() < params.m) {
      const std::size_t pool = rng.bernoulli(params.bias) ? params.core_n : v;
      const NodeId t = draw_smoothed(g, pool, rng);
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    g.add_scene(v);
    for (const NodeId t : targets) {
      g.add_edge(v, t);
      g.add_scene(t);
    }
  }
  finish_scene_counts(g);
  return g;
}

}  // namespace peaknet

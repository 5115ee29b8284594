#pragma once

// Fixed suite of small graphs (<= 8 nodes) for Louvain-vs-exhaustive checks.

#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"

namespace suite {

struct NamedGraph {
  std::string name;
  peaknet::ChronoMultigraph graph;
};

inline peaknet::ChronoMultigraph two_triangles() {
  return oracle::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

inline peaknet::ChronoMultigraph bridged_triangles() {
  return oracle::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

inline peaknet::ChronoMultigraph complete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return oracle::from_edges(n, e);
}

inline std::vector<NamedGraph> small_graphs() {
  std::vector<NamedGraph> out;
  out.push_back({"two triangles", two_triangles()});
  out.push_back({"bridged triangles", bridged_triangles()});
  out.push_back({"K4", complete(4)});
  out.push_back({"K8", complete(8)});
  out.push_back({"path P8", oracle::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}})});
  out.push_back({"star S7", oracle::from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}})});
  out.push_back({"cycle C8", oracle::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}})});
  out.push_back({"barbell K4-K4",
                 oracle::from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                        {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}, {3, 4}})});
  {
    // heavy bridge: weights pull the bridge pair together
    auto g = bridged_triangles();
    g.add_edge(2, 3, 5);
    out.push_back({"bridged triangles, heavy bridge", std::move(g)});
  }
  {
    auto g = oracle::from_edges(7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 4}});
    g.add_edge(0, 1, 3);
    g.add_edge(5, 6, 2);
    out.push_back({"weighted dumbbell", std::move(g)});
  }

  std::mt19937_64 gen(2024);
  int index = 0;
  while (out.size() < 30) {
    const std::size_t n = 5 + static_cast<std::size_t>(gen() % 4);
    const double p = 0.25 + 0.05 * static_cast<double>(gen() % 8);
    auto g = oracle::random_graph(gen, n, p);
    ++index;
    if (g.edge_count() == 0) continue;
    // every third random graph gets multiplicities
    if (index % 3 == 0) {
      for (const auto& e : g.edges()) g.add_edge(e.u, e.v, gen() % 3);
    }
    out.push_back({"random #" + std::to_string(index), std::move(g)});
  }
  return out;
}

}  // namespace suite

#pragma once

#include <cstddef>
#include <cstdint>

#include "peaknet/graph.hpp"

namespace peaknet {

// Generated nodes are named "n0", "n1", ... in creation order. Scene counts
// follow a two-person-scene reading of the edges: every edge is one scene for
// both endpoints, except that the links a growing node forms on arrival are a
// single debut scene for that node. Nodes left without edges count one scene.

struct ErParams {
  std::size_t n = 200;
  double p = 0.1;
  std::uint64_t seed = 0;
};

struct BaParams {
  std::size_t n = 200;
  std::size_t m = 4;
  std::uint64_t seed = 0;
};

struct SplicedParams {
  std::size_t core_n = 30;
  std::size_t periphery_n = 30;
  double core_p = 0.3;
  std::size_t m = 2;
  double bias = 0.9;
  std::uint64_t seed = 0;
};

void validate(const ErParams& params);
void validate(const BaParams& params);
void validate(const SplicedParams& params);

/// Erdős–Rényi G(n, p): each upper-triangle pair, visited row-major, is an
/// edge with probability p.
ChronoMultigraph generate_er(const ErParams& params);

/// Barabási–Albert growth from a complete graph on m+1 nodes. Each new node
/// links to m distinct existing nodes drawn proportionally to degree.
ChronoMultigraph generate_ba(const BaParams& params);

/// Core-periphery splice: an ER(core_n, core_p) core, then periphery nodes
/// added one at a time, each forming m distinct links. A link goes to the
/// core with probability `bias`, otherwise to any existing node; targets are
/// drawn proportionally to degree + 1 within the chosen pool.
ChronoMultigraph generate_spliced(const SplicedParams& params);

}  // namespace peaknet

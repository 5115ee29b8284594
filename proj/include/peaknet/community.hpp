#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "peaknet/graph.hpp"

namespace peaknet {

struct Partition {
  std::vector<std::size_t> assignment;  // node id -> community id in 0..count-1
  std::size_t community_count = 0;
  double modularity = 0.0;
};

/// Newman–Girvan modularity with a resolution factor:
///   Q = 1/(2m) * sum_ij [A_ij - resolution * k_i k_j / (2m)] * delta(c_i, c_j)
/// A is the multiplicity matrix (weighted) or the 0/1 matrix (binary).
/// Community labels may be any values. nullopt for a graph with no edges.
std::optional<double> modularity(const ChronoMultigraph& g, std::span<const std::size_t> assignment,
                                 Weighting w, double resolution = 1.0);

/// Relabels communities 0..c-1 in order of first appearance; returns c.
std::size_t normalize_labels(std::vector<std::size_t>& assignment);

struct LouvainOptions {
  Weighting weighting = Weighting::weighted;
  double resolution = 1.0;
  std::uint64_t seed = 0;
  // Independent runs drawn from one seeded stream; the best final Q is kept.
  std::size_t restarts = 10;
};

struct LouvainResult {
  Partition partition;
  // Modularity of the singleton partition, then after each aggregation level.
  std::vector<double> pass_modularity;
};

/// Two-phase Louvain: local moving until no single-node move improves Q, then
/// aggregation of communities into nodes, repeated until a level moves
/// nothing. Visit order is shuffled per level from `seed`. With several
/// restarts the run with the highest final Q wins, ties to the earliest, and
/// its per-pass trace is reported.
/// Throws ParamError for a graph without edges, a non-positive resolution or
/// zero restarts.
LouvainResult louvain(const ChronoMultigraph& g, const LouvainOptions& options = {});

}  // namespace peaknet

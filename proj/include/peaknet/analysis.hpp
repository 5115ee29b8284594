#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "peaknet/graph.hpp"
#include "peaknet/stats.hpp"

namespace peaknet {

/// Splits nodes at a pivot: the core block is every node with appearance
/// index <= pivot_index (the pivot itself belongs to the core), the periphery
/// block is the rest.
struct SplitSpec {
  std::size_t pivot_index = 0;
};

struct BlockCounts {
  std::size_t core = 0;
  std::size_t periphery = 0;
  std::size_t cross = 0;

  std::size_t total() const { return core + periphery + cross; }
};

struct SplitResult {
  ChronoMultigraph core;  // induced on the core block, original multiplicities
  std::vector<NodeId> core_nodes;
  std::vector<NodeId> periphery_nodes;
  BlockCounts simple_edges;
  BlockCounts multiplicity;
};

/// Throws ParamError when pivot_index >= node count.
SplitResult split(const ChronoMultigraph& g, SplitSpec spec);

struct DceThresholds {
  // Assortativity band: the whole network must sit below -theta and the core
  // within (-theta, theta).
  double theta = 0.15;
};

struct DceReport {
  std::size_t pivot_index = 0;
  std::size_t core_size = 0;
  std::size_t periphery_size = 0;
  double density_core = 0.0;       // within core
  double density_periphery = 0.0;  // within periphery
  double density_cross = 0.0;
  std::size_t edges_full = 0;  // simple edges
  std::size_t edges_core = 0;
  std::optional<double> edge_scaling;  // edges_full / edges_core
  std::optional<double> assortativity_full;
  std::optional<double> assortativity_core;
  double theta = 0.0;
  bool verdict = false;
};

/// Core-periphery signature at a pivot. The verdict requires
///   density_core > density_cross > density_periphery,
///   assortativity_full < -theta and |assortativity_core| < theta,
/// with both blocks non-empty; an undefined assortativity fails its clause.
DceReport dce_report(const ChronoMultigraph& g, SplitSpec spec, const DceThresholds& thresholds = {});

struct PivotScore {
  std::size_t pivot = 0;
  // Log-likelihood of the best-fitting two-block density model with this
  // split (0 for a perfectly uniform fit, otherwise negative).
  double score = 0.0;
  double density_contrast = 0.0;  // density_core - density_periphery
};

struct PivotScan {
  std::size_t best_pivot = 0;
  std::vector<PivotScore> scores;  // pivots 1 .. n-2
};

/// Scores every pivot in [1, n-2] and returns the highest-scoring one, ties
/// to the smallest pivot. Throws ParamError for fewer than 4 nodes.
PivotScan scan_pivot(const ChronoMultigraph& g);

struct PruneResult {
  ChronoMultigraph graph;
  std::vector<std::string> removed;  // appearance order
  // Filled when a split is supplied.
  std::vector<std::string> removed_core;
  std::vector<std::string> removed_periphery;
};

/// Drops every node seen in exactly one scene. Scene counts are carried over,
/// not recomputed, so pruning twice removes nothing more.
PruneResult prune_single_scene(const ChronoMultigraph& g, std::optional<SplitSpec> spec = std::nullopt);

/// Induced multigraph on all nodes not named. Throws LookupError naming every
/// unknown entry.
ChronoMultigraph remove_nodes(const ChronoMultigraph& g, std::span<const std::string> names);

/// Kolmogorov–Smirnov statistic between two degree distributions: the largest
/// absolute gap between their CCDFs over the union of supports.
double distribution_distance(const DegreeDistribution& a, const DegreeDistribution& b);

struct CollapseReport {
  std::string removed_hub;  // empty when the pruned graph has no nodes
  std::size_t pruned_nodes = 0;
  double distance_full = 0.0;
  std::optional<double> distance_pruned;
  std::optional<double> distance_collapsed;
};

/// Prune single-scene nodes, drop the top-degree node, and track the KS
/// distance of the unweighted degree distribution to that of the core block
/// at each stage.
CollapseReport collapse_experiment(const ChronoMultigraph& g, SplitSpec spec);

struct RemovalReport {
  ChronoMultigraph remaining;
  std::vector<std::vector<NodeId>> components;  // ids in `remaining`
  std::vector<std::string> isolated;            // nodes left with no edges
  std::string central_node;  // highest degree in the largest component
};

RemovalReport removal_experiment(const ChronoMultigraph& g, std::span<const std::string> names);

}  // namespace peaknet

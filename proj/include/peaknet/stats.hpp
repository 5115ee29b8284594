#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "peaknet/graph.hpp"

namespace peaknet {

struct CcdfPoint {
  std::size_t x = 0;
  std::size_t count = 0;  // nodes with degree > x
  double p = 0.0;         // count / n
};

struct DegreeDistribution {
  std::vector<std::size_t> degrees;  // appearance order
  std::vector<CcdfPoint> ccdf;       // x = 0 .. max degree

  std::size_t max_degree() const { return ccdf.empty() ? 0 : ccdf.back().x; }
  /// P(degree > x) for any x, including points past the stored range.
  double ccdf_at(std::size_t x) const;
};

/// Throws ParamError on a graph with no nodes.
DegreeDistribution degree_distribution(const ChronoMultigraph& g, Weighting w);

/// Degree assortativity: Pearson correlation of the unweighted degrees at the
/// two ends of every simple edge, each edge read in both orientations.
/// nullopt when there are no edges or all endpoint degrees are equal.
std::optional<double> assortativity(const ChronoMultigraph& g);

struct RankedNode {
  NodeId id = 0;
  std::string name;
  std::size_t degree = 0;
};

struct RankedLink {
  NodeId u = 0;
  NodeId v = 0;
  std::string name_u;
  std::string name_v;
  std::size_t multiplicity = 0;
};

struct TopK {
  std::vector<RankedNode> top_nodes;
  std::vector<RankedLink> top_links;
};

/// Highest unweighted degrees and most repeated pairs. Ties go to the lower
/// appearance index, then the lexicographically smaller pair.
TopK top_k(const ChronoMultigraph& g, std::size_t k);

/// Simple-edge density within one set (pass the same set twice) or across two
/// disjoint sets. Throws ParamError for sets that overlap without being equal.
double density(const ChronoMultigraph& g, std::span<const NodeId> a, std::span<const NodeId> b);

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t points = 0;
};

/// Plot-ready (log10 x, log10 p) points of a CCDF, x and p both positive.
std::vector<std::pair<double, double>> loglog_points(const DegreeDistribution& d,
                                                     std::size_t x_min, std::size_t x_max);

/// Least-squares line through loglog_points(). Fewer than 2 points or zero
/// spread in x gives nullopt.
std::optional<LogLogFit> fit_loglog_ccdf(const DegreeDistribution& d, std::size_t x_min,
                                         std::size_t x_max);

}  // namespace peaknet

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "peaknet/corpus.hpp"

namespace peaknet {

/// Position of a node in first-appearance order; doubles as its index.
using NodeId = std::size_t;

/// Which adjacency interpretation a query reads: binary (edge present or not)
/// or the multigraph's multiplicities.
enum class Weighting { binary, weighted };

struct Node {
  std::string name;
  std::size_t appearance_index = 0;
  std::size_t scene_count = 0;
};

struct Edge {
  NodeId u = 0;  // u < v
  NodeId v = 0;
  std::size_t multiplicity = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected, loop-free multigraph whose node ids follow first appearance.
///
/// Edges are stored as per-node neighbor maps (neighbor -> multiplicity), kept
/// symmetric. Iteration over neighbors and edges is ordered by node id, which
/// keeps every downstream result deterministic.
class ChronoMultigraph {
 public:
  ChronoMultigraph() = default;

  /// Appends a node at the next appearance index. Throws ParamError on a
  /// duplicate name.
  NodeId add_node(std::string name, std::size_t scene_count = 0);

  /// Adds `count` parallel edges between u and v. Throws ParamError on a
  /// self-loop and LookupError on unknown ids.
  void add_edge(NodeId u, NodeId v, std::size_t count = 1);

  void set_scene_count(NodeId u, std::size_t scene_count);
  void add_scene(NodeId u) { ++nodes_.at(u).scene_count; }

  std::size_t node_count() const { return nodes_.size(); }
  /// Number of node pairs with at least one edge.
  std::size_t edge_count() const { return pair_count_; }
  /// Sum of multiplicities over all pairs.
  std::size_t total_multiplicity() const { return total_multiplicity_; }

  const Node& node(NodeId u) const { return nodes_.at(u); }
  const std::vector<Node>& nodes() const { return nodes_; }

  std::optional<NodeId> find(const std::string& name) const;
  /// Like find() but throws LookupError.
  NodeId id_of(const std::string& name) const;

  std::size_t multiplicity(NodeId u, NodeId v) const;
  const std::map<NodeId, std::size_t>& neighbors(NodeId u) const { return adj_.at(u); }
  std::size_t degree(NodeId u, Weighting w) const;

  /// All edges with u < v, sorted by (u, v).
  std::vector<Edge> edges() const;

  friend bool operator==(const ChronoMultigraph& a, const ChronoMultigraph& b);

 private:
  std::vector<Node> nodes_;
  std::vector<std::map<NodeId, std::size_t>> adj_;
  std::vector<std::size_t> weighted_degree_;
  std::unordered_map<std::string, NodeId> index_;
  std::size_t pair_count_ = 0;
  std::size_t total_multiplicity_ = 0;
};

/// Dense n x n adjacency matrix in appearance order.
struct AdjacencyMatrix {
  std::size_t n = 0;
  std::vector<std::size_t> entries;  // row-major

  std::size_t at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  std::size_t row_sum(std::size_t i) const;
};

/// Chronological co-occurrence construction: a node per new character, one
/// edge increment per pair of characters sharing a scene.
ChronoMultigraph build_network(const SceneSequence& seq);

AdjacencyMatrix adjacency(const ChronoMultigraph& g, Weighting w);

std::size_t degree(const ChronoMultigraph& g, NodeId u, Weighting w);
std::size_t degree(const ChronoMultigraph& g, const std::string& name, Weighting w);

/// Copy with every multiplicity clamped to 1.
ChronoMultigraph simple_view(const ChronoMultigraph& g);

/// Distance-style weights: a pair joined n times gets weight 1/n.
std::map<std::pair<NodeId, NodeId>, double> collaboration_weights(const ChronoMultigraph& g);

/// Maximal connected node sets, each sorted ascending, ordered by their
/// smallest id. Isolated nodes form singletons.
std::vector<std::vector<NodeId>> connected_components(const ChronoMultigraph& g);

/// Induced multigraph on `keep` (any order, no duplicates). Node order and
/// scene counts are preserved; appearance indices are re-ranked.
ChronoMultigraph induced_subgraph(const ChronoMultigraph& g, std::span<const NodeId> keep);

}  // namespace peaknet

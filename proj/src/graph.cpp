#include "peaknet/graph.hpp"

#include <algorithm>
#include <numeric>

#include "peaknet/error.hpp"

namespace peaknet {

NodeId ChronoMultigraph::add_node(std::string name, std::size_t scene_count) {
  const NodeId id = nodes_.size();
  if (!index_.emplace(name, id).second) {
    throw ParamError("duplicate node name '" + name + "'");
  }
  nodes_.push_back(Node{std::move(name), id, scene_count});
  adj_.emplace_back();
  weighted_degree_.push_back(0);
  return id;
}

void ChronoMultigraph::add_edge(NodeId u, NodeId v, std::size_t count) {
  if (u >= nodes_.size() || v >= nodes_.size()) {
    throw LookupError("edge endpoint out of range");
  }
  if (u == v) throw ParamError("self-loop on '" + nodes_[u].name + "'");
  if (count == 0) return;
  auto& m = adj_[u][v];
  if (m == 0) ++pair_count_;
  m += count;
  adj_[v][u] += count;
  weighted_degree_[u] += count;
  weighted_degree_[v] += count;
  total_multiplicity_ += count;
}

void ChronoMultigraph::set_scene_count(NodeId u, std::size_t scene_count) {
  nodes_.at(u).scene_count = scene_count;
}

std::optional<NodeId> ChronoMultigraph::find(const std::string& name) const {
  const auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId ChronoMultigraph::id_of(const std::string& name) const {
  const auto id = find(name);
  if (!id) throw LookupError("unknown node '" + name + "'");
  return *id;
}

std::size_t ChronoMultigraph::multiplicity(NodeId u, NodeId v) const {
  const auto& nbrs = adj_.at(u);
  const auto it = nbrs.find(v);
  return it == nbrs.end() ? 0 : it->second;
}

std::size_t ChronoMultigraph::degree(NodeId u, Weighting w) const {
  return w == Weighting::weighted ? weighted_degree_.at(u) : adj_.at(u).size();
}

std::vector<Edge> ChronoMultigraph::edges() const {
  std::vector<Edge> out;
  out.reserve(pair_count_);
  for (NodeId u = 0; u < adj_.size(); ++u) {
    for (auto it = adj_[u].upper_bound(u); it != adj_[u].end(); ++it) {
      out.push_back(Edge{u, it->first, it->second});
    }
  }
  return out;
}

bool operator==(const ChronoMultigraph& a, const ChronoMultigraph& b) {
  if (a.nodes_.size() != b.nodes_.size()) return false;
  for (std::size_t i = 0; i < a.nodes_.size(); ++i) {
    const auto& x = a.nodes_[i];
    const auto& y = b.nodes_[i];
    if (x.name != y.name || x.appearance_index != y.appearance_index ||
        x.scene_count != y.scene_count) {
      return false;
    }
  }
  return a.adj_ == b.adj_;
}

std::size_t AdjacencyMatrix::row_sum(std::size_t i) const {
  const auto row = entries.begin() + static_cast<std::ptrdiff_t>(i * n);
  return std::accumulate(row, row + static_cast<std::ptrdiff_t>(n), std::size_t{0});
}

ChronoMultigraph build_network(const SceneSequence& seq) {
  ChronoMultigraph g;
  std::vector<NodeId> ids;
  for (const auto& scene : seq.scenes) {
    ids.clear();
    for (const auto& name : scene) {
      const auto existing = g.find(name);
      const NodeId id = existing ? *existing : g.add_node(name);
      // Scenes from parse_scenes never repeat a name; guard anyway so a
      // hand-built sequence cannot create a loop.
      if (std::find(ids.begin(), ids.end(), id) != ids.end()) continue;
      g.add_scene(id);
      ids.push_back(id);
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) g.add_edge(ids[i], ids[j]);
    }
  }
  return g;
}

AdjacencyMatrix adjacency(const ChronoMultigraph& g, Weighting w) {
  AdjacencyMatrix m;
  m.n = g.node_count();
  m.entries.assign(m.n * m.n, 0);
  for (const auto& e : g.edges()) {
    const std::size_t value = w == Weighting::weighted ? e.multiplicity : 1;
    m.entries[e.u * m.n + e.v] = value;
    m.entries[e.v * m.n + e.u] = value;
  }
  return m;
}

std::size_t degree(const ChronoMultigraph& g, NodeId u, Weighting w) {
  if (u >= g.node_count()) throw LookupError("unknown node id " + std::to_string(u));
  return g.degree(u, w);
}

std::size_t degree(const ChronoMultigraph& g, const std::string& name, Weighting w) {
  return g.degree(g.id_of(name), w);
}

ChronoMultigraph simple_view(const ChronoMultigraph& g) {
  ChronoMultigraph out;
  for (const auto& n : g.nodes()) out.add_node(n.name, n.scene_count);
  for (const auto& e : g.edges()) out.add_edge(e.u, e.v, 1);
  return out;
}

std::map<std::pair<NodeId, NodeId>, double> collaboration_weights(const ChronoMultigraph& g) {
  std::map<std::pair<NodeId, NodeId>, double> out;
  for (const auto& e : g.edges()) {
    out.emplace(std::pair{e.u, e.v}, 1.0 / static_cast<double>(e.multiplicity));
  }
  return out;
}

std::vector<std::vector<NodeId>> connected_components(const ChronoMultigraph& g) {
  const std::size_t n = g.node_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<NodeId>> out;
  std::vector<NodeId> stack;
  for (NodeId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<NodeId> comp;
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (const auto& [v, m] : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

ChronoMultigraph induced_subgraph(const ChronoMultigraph& g, std::span<const NodeId> keep) {
  std::vector<NodeId> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ParamError("induced_subgraph: duplicate node id");
  }
  constexpr auto absent = static_cast<NodeId>(-1);
  std::vector<NodeId> remap(g.node_count(), absent);
  ChronoMultigraph out;
  for (const NodeId u : sorted) {
    if (u >= g.node_count()) throw LookupError("unknown node id " + std::to_string(u));
    remap[u] = out.add_node(g.node(u).name, g.node(u).scene_count);
  }
  for (const NodeId u : sorted) {
    const auto& nbrs = g.neighbors(u);
    for (auto it = nbrs.upper_bound(u); it != nbrs.end(); ++it) {
      if (remap[it->first] != absent) out.add_edge(remap[u], remap[it->first], it->second);
    }
  }
  return out;
}

}  // namespace peaknet

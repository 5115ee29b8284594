#include "peaknet/stats.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "peaknet/error.hpp"

namespace peaknet {

double DegreeDistribution::ccdf_at(std::size_t x) const {
  if (x < ccdf.size()) return ccdf[x].p;
  return 0.0;
}

DegreeDistribution degree_distribution(const ChronoMultigraph& g, Weighting w) {
  const std::size_t n = g.node_count();
  if (n == 0) throw ParamError("degree distribution of an empty graph");
  DegreeDistribution d;
  d.degrees.reserve(n);
  for (NodeId u = 0; u < n; ++u) d.degrees.push_back(g.degree(u, w));
  const std::size_t max_deg = *std::max_element(d.degrees.begin(), d.degrees.end());

  // histogram, then suffix sums give "strictly greater than x" counts
  std::vector<std::size_t> hist(max_deg + 1, 0);
  for (const auto k : d.degrees) ++hist[k];
  d.ccdf.resize(max_deg + 1);
  std::size_t above = 0;
  for (std::size_t x = max_deg + 1; x-- > 0;) {
    d.ccdf[x] = CcdfPoint{x, above, static_cast<double>(above) / static_cast<double>(n)};
    above += hist[x];
  }
  return d;
}

std::optional<double> assortativity(const ChronoMultigraph& g) {
  const auto edges = g.edges();
  if (edges.empty()) return std::nullopt;

  // Both orientations make the x and y marginals identical, so one mean and
  // one variance serve both.
  double sum = 0.0;
  std::size_t lo = SIZE_MAX;
  std::size_t hi = 0;
  for (const auto& e : edges) {
    const auto a = g.degree(e.u, Weighting::binary);
    const auto b = g.degree(e.v, Weighting::binary);
    sum += static_cast<double>(a + b);
    lo = std::min({lo, a, b});
    hi = std::max({hi, a, b});
  }
  if (lo == hi) return std::nullopt;
  const double mean = sum / (2.0 * static_cast<double>(edges.size()));

  double cov = 0.0;
  double var = 0.0;
  for (const auto& e : edges) {
    const double a = static_cast<double>(g.degree(e.u, Weighting::binary)) - mean;
    const double b = static_cast<double>(g.degree(e.v, Weighting::binary)) - mean;
    cov += 2.0 * a * b;
    var += a * a + b * b;
  }
  return std::clamp(cov / var, -1.0, 1.0);
}

TopK top_k(const ChronoMultigraph& g, std::size_t k) {
  TopK out;
  std::vector<NodeId> ids(g.node_count());
  for (NodeId u = 0; u < ids.size(); ++u) ids[u] = u;
  std::stable_sort(ids.begin(), ids.end(), [&](NodeId a, NodeId b) {
    return g.degree(a, Weighting::binary) > g.degree(b, Weighting::binary);
  });
  for (std::size_t i = 0; i < std::min(k, ids.size()); ++i) {
    out.top_nodes.push_back(
        RankedNode{ids[i], g.node(ids[i]).name, g.degree(ids[i], Weighting::binary)});
  }

  // edges() is already in (u, v) order, so a stable sort keeps the tie rule
  auto edges = g.edges();
  std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.multiplicity > b.multiplicity;
  });
  for (std::size_t i = 0; i < std::min(k, edges.size()); ++i) {
    const auto& e = edges[i];
    out.top_links.push_back(
        RankedLink{e.u, e.v, g.node(e.u).name, g.node(e.v).name, e.multiplicity});
  }
  return out;
}

double density(const ChronoMultigraph& g, std::span<const NodeId> a, std::span<const NodeId> b) {
  const std::set<NodeId> sa(a.begin(), a.end());
  const std::set<NodeId> sb(b.begin(), b.end());
  if (sa.size() != a.size() || sb.size() != b.size()) {
    throw ParamError("density: node set contains duplicates");
  }
  for (const auto u : sa) {
    if (u >= g.node_count()) throw LookupError("density: unknown node id " + std::to_string(u));
  }
  for (const auto u : sb) {
    if (u >= g.node_count()) throw LookupError("density: unknown node id " + std::to_string(u));
  }

  if (sa == sb) {
    const std::size_t k = sa.size();
    if (k < 2) return 0.0;
    std::size_t inside = 0;
    for (const auto u : sa) {
      const auto& nbrs = g.neighbors(u);
      for (auto it = nbrs.upper_bound(u); it != nbrs.end(); ++it) inside += sa.count(it->first);
    }
    return static_cast<double>(inside) / (static_cast<double>(k) * static_cast<double>(k - 1) / 2.0);
  }

  for (const auto u : sa) {
    if (sb.count(u) != 0) throw ParamError("density: sets overlap but are not identical");
  }
  if (sa.empty() || sb.empty()) return 0.0;
  std::size_t cross = 0;
  for (const auto u : sa) {
    for (const auto& [v, m] : g.neighbors(u)) cross += sb.count(v);
  }
  return static_cast<double>(cross) / (static_cast<double>(sa.size()) * static_cast<double>(sb.size()));
}

std::vector<std::pair<double, double>> loglog_points(const DegreeDistribution& d,
                                                     std::size_t x_min, std::size_t x_max) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& pt : d.ccdf) {
    if (pt.x == 0 || pt.count == 0 || pt.x < x_min || pt.x > x_max) continue;
    pts.emplace_back(std::log10(static_cast<double>(pt.x)), std::log10(pt.p));
  }
  return pts;
}

std::optional<LogLogFit> fit_loglog_ccdf(const DegreeDistribution& d, std::size_t x_min,
                                         std::size_t x_max) {
  const auto pts = loglog_points(d, x_min, x_max);
  if (pts.size() < 2) return std::nullopt;
  const double n = static_cast<double>(pts.size());
  double mx = 0.0;
  double my = 0.0;
  for (const auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (const auto& [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  if (sxx == 0.0) return std::nullopt;
  LogLogFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  fit.points = pts.size();
  return fit;
}

}  // namespace peaknet

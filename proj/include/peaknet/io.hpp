#pragma once

#include <string>

#include "json.hpp"

#include "peaknet/analysis.hpp"
#include "peaknet/community.hpp"
#include "peaknet/graph.hpp"
#include "peaknet/stats.hpp"

namespace peaknet {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

// Every text artifact ends with a newline and names the tool version: CSV and
// DOT in a leading comment line, GraphML in an XML comment, JSON in the
// "tool_version" field.

/// Graph as GraphML; edge multiplicity (or 1 for binary) in the "weight" key.
std::string to_graphml(const ChronoMultigraph& g, Weighting w);

/// Undirected DOT graph. With a partition, nodes are filled by community.
std::string to_dot(const ChronoMultigraph& g, Weighting w, const Partition* partition = nullptr);

/// Adjacency matrix with a header row of node names in appearance order.
std::string adjacency_csv(const ChronoMultigraph& g, Weighting w);

std::string ccdf_csv(const DegreeDistribution& d);
std::string top_k_csv(const TopK& t);
std::string partition_csv(const ChronoMultigraph& g, const Partition& p);
std::string pivot_scan_csv(const PivotScan& scan);

/// Quotes a CSV field when it contains a comma, quote or line break.
std::string csv_field(const std::string& s);

/// Fixed six-digit decimal rendering used for every float in artifacts.
std::string format_decimal(double x);

/// Pretty-printed JSON (two-space indent, keys in insertion order) with every
/// floating-point number rendered through format_decimal().
std::string format_json(const nlohmann::ordered_json& j);

/// JSON number or null for an undefined value.
nlohmann::ordered_json optional_number(const std::optional<double>& x);

nlohmann::ordered_json to_json(const DceReport& r);
nlohmann::ordered_json to_json(const TopK& t);
nlohmann::ordered_json to_json(const CollapseReport& r);

/// Common header fields of every JSON artifact.
nlohmann::ordered_json artifact_header(const std::string& kind);

}  // namespace peaknet

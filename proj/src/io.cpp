#include "peaknet/io.hpp"

#include <cmath>
#include <cstdio>

namespace peaknet {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_header_comment() { return std::string("# peaknet ") + kToolVersion + "\n"; }

std::size_t edge_value(const Edge& e, Weighting w) {
  return w == Weighting::weighted ? e.multiplicity : 1;
}

// Colour-blind-safe qualitative palette, cycled for large partitions.
constexpr const char* kPalette[] = {"#4477AA", "#EE6677", "#228833", "#CCBB44",
                                    "#66CCEE", "#AA3377", "#BBBBBB", "#000000"};

void write_json(const ordered_json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case ordered_json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += inner + ordered_json(key).dump() + ": ";
        write_json(value, out, indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case ordered_json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line; they are mostly degree lists.
      bool scalars = true;
      for (const auto& v : j) scalars = scalars && !v.is_structured();
      if (scalars) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i != 0) out += ", ";
          write_json(j[i], out, indent + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i != 0) out += ",\n";
        out += inner;
        write_json(j[i], out, indent + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case ordered_json::value_t::number_float: {
      const double x = j.get<double>();
      out += std::isfinite(x) ? format_decimal(x) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string format_decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string to_graphml(const ChronoMultigraph& g, Weighting w) {
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += std::string("<!-- peaknet ") + kToolVersion + " -->\n";
  out += "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
  out += "  <key id=\"name\" for=\"node\" attr.name=\"name\" attr.type=\"string\"/>\n";
  out += "  <key id=\"appearance_index\" for=\"node\" attr.name=\"appearance_index\" attr.type=\"int\"/>\n";
  out += "  <key id=\"scene_count\" for=\"node\" attr.name=\"scene_count\" attr.type=\"int\"/>\n";
  out += "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"int\"/>\n";
  out += "  <graph id=\"G\" edgedefault=\"undirected\">\n";
  for (const auto& n : g.nodes()) {
    out += "    <node id=\"n" + std::to_string(n.appearance_index) + "\">\n";
    out += "      <data key=\"name\">" + xml_escape(n.name) + "</data>\n";
    out += "      <data key=\"appearance_index\">" + std::to_string(n.appearance_index) + "</data>\n";
    out += "      <data key=\"scene_count\">" + std::to_string(n.scene_count) + "</data>\n";
    out += "    </node>\n";
  }
  for (const auto& e : g.edges()) {
    out += "    <edge source=\"n" + std::to_string(e.u) + "\" target=\"n" + std::to_string(e.v) +
           "\">\n";
    out += "      <data key=\"weight\">" + std::to_string(edge_value(e, w)) + "</data>\n";
    out += "    </edge>\n";
  }
  out += "  </graph>\n</graphml>\n";
  return out;
}

std::string to_dot(const ChronoMultigraph& g, Weighting w, const Partition* partition) {
  std::string out = std::string("// peaknet ") + kToolVersion + "\n";
  out += "graph peaknet {\n";
  if (partition != nullptr) out += "  node [style=filled];\n";
  for (const auto& n : g.nodes()) {
    out += "  n" + std::to_string(n.appearance_index) + " [label=" + dot_quote(n.name);
    if (partition != nullptr) {
      const auto c = partition->assignment.at(n.appearance_index);
      out += ", community=" + std::to_string(c);
      out += ", fillcolor=" + dot_quote(kPalette[c % std::size(kPalette)]);
    }
    out += "];\n";
  }
  for (const auto& e : g.edges()) {
    out += "  n" + std::to_string(e.u) + " -- n" + std::to_string(e.v) +
           " [weight=" + std::to_string(edge_value(e, w)) + "];\n";
  }
  out += "}\n";
  return out;
}

std::string adjacency_csv(const ChronoMultigraph& g, Weighting w) {
  const auto m = adjacency(g, w);
  std::string out = csv_header_comment();
  out += "name";
  for (const auto& n : g.nodes()) out += "," + csv_field(n.name);
  out += "\n";
  for (std::size_t i = 0; i < m.n; ++i) {
    out += csv_field(g.node(i).name);
    for (std::size_t j = 0; j < m.n; ++j) out += "," + std::to_string(m.at(i, j));
    out += "\n";
  }
  return out;
}

std::string ccdf_csv(const DegreeDistribution& d) {
  std::string out = csv_header_comment();
  out += "x,p\n";
  for (const auto& pt : d.ccdf) out += std::to_string(pt.x) + "," + format_decimal(pt.p) + "\n";
  return out;
}

std::string top_k_csv(const TopK& t) {
  std::string out = csv_header_comment();
  out += "rank,kind,name,value\n";
  for (std::size_t i = 0; i < t.top_nodes.size(); ++i) {
    out += std::to_string(i + 1) + ",node," + csv_field(t.top_nodes[i].name) + "," +
           std::to_string(t.top_nodes[i].degree) + "\n";
  }
  for (std::size_t i = 0; i < t.top_links.size(); ++i) {
    const auto& l = t.top_links[i];
    out += std::to_string(i + 1) + ",link," + csv_field(l.name_u + " & " + l.name_v) + "," +
           std::to_string(l.multiplicity) + "\n";
  }
  return out;
}

std::string partition_csv(const ChronoMultigraph& g, const Partition& p) {
  std::string out = csv_header_comment();
  out += "name,community\n";
  for (const auto& n : g.nodes()) {
    out += csv_field(n.name) + "," + std::to_string(p.assignment.at(n.appearance_index)) + "\n";
  }
  return out;
}

std::string pivot_scan_csv(const PivotScan& scan) {
  std::string out = csv_header_comment();
  out += "pivot,score,density_contrast\n";
  for (const auto& s : scan.scores) {
    out += std::to_string(s.pivot) + "," + format_decimal(s.score) + "," +
           format_decimal(s.density_contrast) + "\n";
  }
  return out;
}

std::string format_json(const ordered_json& j) {
  std::string out;
  write_json(j, out, 0);
  out += "\n";
  return out;
}

ordered_json optional_number(const std::optional<double>& x) {
  return x ? ordered_json(*x) : ordered_json(nullptr);
}

ordered_json artifact_header(const std::string& kind) {
  ordered_json j;
  j["tool_version"] = kToolVersion;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

ordered_json to_json(const DceReport& r) {
  ordered_json j;
  j["pivot_index"] = r.pivot_index;
  j["core_size"] = r.core_size;
  j["periphery_size"] = r.periphery_size;
  j["density_core"] = r.density_core;
  j["density_cross"] = r.density_cross;
  j["density_periphery"] = r.density_periphery;
  j["edges_full"] = r.edges_full;
  j["edges_core"] = r.edges_core;
  j["edge_scaling"] = optional_number(r.edge_scaling);
  j["assortativity_full"] = optional_number(r.assortativity_full);
  j["assortativity_core"] = optional_number(r.assortativity_core);
  j["theta"] = r.theta;
  j["verdict"] = r.verdict;
  return j;
}

ordered_json to_json(const TopK& t) {
  ordered_json j;
  j["nodes"] = ordered_json::array();
  for (const auto& n : t.top_nodes) j["nodes"].push_back({{"name", n.name}, {"degree", n.degree}});
  j["links"] = ordered_json::array();
  for (const auto& l : t.top_links) {
    j["links"].push_back({{"a", l.name_u}, {"b", l.name_v}, {"multiplicity", l.multiplicity}});
  }
  return j;
}

ordered_json to_json(const CollapseReport& r) {
  ordered_json j;
  j["pruned_nodes"] = r.pruned_nodes;
  j["removed_hub"] = r.removed_hub;
  j["distance_full"] = r.distance_full;
  j["distance_pruned"] = optional_number(r.distance_pruned);
  j["distance_collapsed"] = optional_number(r.distance_collapsed);
  return j;
}

}  // namespace peaknet

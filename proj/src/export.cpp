// Copyright 2026 The LINSIA Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "linsia/export.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "linsia/metrics.hpp"

namespace linsia {

using nlohmann::json;

ExportFormat parse_export_format(std::string_view name) {
  if (name == "graphml") return ExportFormat::kGraphml;
  if (name == "dot") return ExportFormat::kDot;
  throw Error("unknown export format '" + std::string(name) + "' (expected graphml or dot)");
}

namespace {

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
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

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct NodeAnnotation {
  std::string labels;
  std::string role;
  std::vector<std::pair<std::size_t, double>> intensity;  // community index, share
};

std::vector<NodeAnnotation> annotate(const Graph& graph, const StructureReport& report) {
  if (report.best_cover.num_nodes() != graph.num_nodes() ||
      report.intensity.size() != graph.num_nodes()) {
    throw Error("report does not cover every node of the graph");
  }
  std::vector<NodeAnnotation> out(graph.num_nodes());
  for (NodeId i = 0; i < graph.num_nodes(); ++i) {
    NodeAnnotation& a = out[i];
    a.labels = "[";
    bool first = true;
    for (std::size_t c : report.best_cover.memberships(i)) {
      if (!first) a.labels += ',';
      a.labels += "c" + std::to_string(c);
      first = false;
    }
    a.labels += "]";
    a.role = std::string(to_string(report.role(i)));
    for (const LabelEntry& e : report.intensity[i]) {
      auto it = std::find(report.best_labels.begin(), report.best_labels.end(), e.label);
      if (it == report.best_labels.end()) throw Error("intensity names an unknown community");
      a.intensity.emplace_back(static_cast<std::size_t>(it - report.best_labels.begin()),
                               e.influence);
    }
    std::sort(a.intensity.begin(), a.intensity.end());
  }
  return out;
}

}  // namespace

std::string export_annotated(const Graph& graph, const StructureReport& report,
                             ExportFormat format) {
  const std::vector<NodeAnnotation> nodes = annotate(graph, report);
  std::ostringstream out;
  if (format == ExportFormat::kGraphml) {
    std::set<std::size_t> used;
    for (const NodeAnnotation& a : nodes) {
      for (const auto& [c, share] : a.intensity) used.insert(c);
    }
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"labels\" for=\"node\" attr.name=\"labels\" attr.type=\"string\"/>\n"
        << "  <key id=\"role\" for=\"node\" attr.name=\"role\" attr.type=\"string\"/>\n";
    for (std::size_t c : used) {
      out << "  <key id=\"intensity_c" << c << "\" for=\"node\" attr.name=\"intensity_c" << c
          << "\" attr.type=\"double\"/>\n";
    }
    out << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n"
        << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
    for (NodeId i = 0; i < graph.num_nodes(); ++i) {
      out << "    <node id=\"" << xml_escape(graph.alias(i)) << "\">\n"
          << "      <data key=\"labels\">" << nodes[i].labels << "</data>\n"
          << "      <data key=\"role\">" << nodes[i].role << "</data>\n";
      for (const auto& [c, share] : nodes[i].intensity) {
        out << "      <data key=\"intensity_c" << c << "\">" << number(share) << "</data>\n";
      }
      out << "    </node>\n";
    }
    for (const Edge& e : graph.edges()) {
      out << "    <edge source=\"" << xml_escape(graph.alias(e.u)) << "\" target=\""
          << xml_escape(graph.alias(e.v)) << "\">\n"
          << "      <data key=\"weight\">" << number(e.weight) << "</data>\n"
          << "    </edge>\n";
    }
    out << "  </graph>\n</graphml>\n";
  } else {
    out << "graph G {\n";
    for (NodeId i = 0; i < graph.num_nodes(); ++i) {
      out << "  " << dot_quote(graph.alias(i)) << " [labels=" << dot_quote(nodes[i].labels)
          << ", role=" << dot_quote(nodes[i].role);
      for (const auto& [c, share] : nodes[i].intensity) {
        out << ", intensity_c" << c << "=" << dot_quote(number(share));
      }
      out << "];\n";
    }
    for (const Edge& e : graph.edges()) {
      out << "  " << dot_quote(graph.alias(e.u)) << " -- " << dot_quote(graph.alias(e.v))
          << " [weight=" << dot_quote(number(e.weight)) << "];\n";
    }
    out << "}\n";
  }
  return out.str();
}

json cover_json(const Graph& graph, const Cover& cover) {
  json out = json::array();
  for (const Community& c : cover.communities()) {
    json members = json::array();
    for (NodeId v : c) members.push_back(graph.alias(v));
    out.push_back(std::move(members));
  }
  return out;
}

json influence_json(const Graph& graph, const InfluenceTable& table) {
  json out;
  out["alpha"] = table.alpha;
  out["r"] = table.r;
  out["n_prime"] = table.n_prime;
  json nodes = json::array();
  for (NodeId i = 0; i < graph.num_nodes(); ++i) {
    nodes.push_back({{"node", graph.alias(i)},
                     {"kshell", table.kshell[i]},
                     {"nbr_coreness", table.nbr_coreness[i]},
                     {"encoreness", table.encoreness[i]},
                     {"influence", table.node_influence[i]}});
  }
  out["nodes"] = std::move(nodes);
  return out;
}

json detect_json(const Graph& graph, const InfluenceTable& table, const LabelState& state) {
  json out;
  out["mode"] = std::string(to_string(state.mode));
  out["alpha"] = table.alpha;
  out["sweeps"] = state.sweeps;
  out["converged"] = state.converged;
  const Cover cover = cover_from_labels(state);
  out["num_communities"] = cover.size();
  out["communities"] = cover_json(graph, cover);
  return out;
}

json hierarchy_json(const Graph& graph, const Hierarchy& hierarchy, const Division& division) {
  json out;
  out["metric"] = std::string(to_string(division.metric));
  out["best_level"] = division.best;
  out["subc_level"] = division.subc;
  json levels = json::array();
  for (std::size_t t = 0; t < hierarchy.levels.size(); ++t) {
    const Level& level = hierarchy.levels[t];
    levels.push_back({{"level", t},
                      {"communities", level.cover.size()},
                      {"score", division.scores[t]},
                      {"alpha", level.alpha},
                      {"sweeps", level.sweeps},
                      {"converged", level.converged},
                      {"super_edges", level.super_network.num_edges()}});
  }
  out["levels"] = std::move(levels);
  out["best"] = cover_json(graph, hierarchy.levels[division.best].cover);
  return out;
}

json report_json(const Graph& graph, const StructureReport& report) {
  json out;
  out["mode"] = std::string(to_string(report.mode));
  out["best_level"] = report.best_level;
  out["subc_level"] = report.subc_level;
  out["best"] = cover_json(graph, report.best_cover);
  out["subc"] = cover_json(graph, report.subc_cover);
  json labels = json::array();
  for (Label l : report.best_labels) labels.push_back(graph.alias(l));
  out["best_labels"] = std::move(labels);
  json hubs = json::array();
  for (NodeId v : report.hubs) hubs.push_back(graph.alias(v));
  out["hubs"] = std::move(hubs);
  json outliers = json::array();
  for (NodeId v : report.outliers) outliers.push_back(graph.alias(v));
  out["outliers"] = std::move(outliers);
  json intensity = json::object();
  for (NodeId i = 0; i < graph.num_nodes(); ++i) {
    json shares = json::array();
    for (const LabelEntry& e : report.intensity[i]) {
      shares.push_back(json::array({graph.alias(e.label), e.influence}));
    }
    intensity[graph.alias(i)] = std::move(shares);
  }
  out["intensity"] = std::move(intensity);
  out["hub_intensity"] = hub_intensity_display(graph, report);
  out["metrics"] = report.metrics;
  out["alpha"] = report.alpha;
  out["sweeps"] = report.sweeps;
  out["converged"] = report.converged;
  return out;
}

std::string hub_intensity_display(const Graph& graph, const StructureReport& report) {
  std::string out = "{";
  char buf[32];
  for (std::size_t h = 0; h < report.hubs.size(); ++h) {
    const NodeId v = report.hubs[h];
    if (h > 0) out += ", ";
    out += graph.alias(v) + ": [";
    const LabelSet& shares = report.intensity[v];
    for (std::size_t k = 0; k < shares.size(); ++k) {
      if (k > 0) out += ", ";
      std::snprintf(buf, sizeof(buf), "%.3f", shares[k].influence);
      out += "(" + graph.alias(shares[k].label) + ", " + buf + ")";
    }
    out += "]";
  }
  return out + "}";
}

}  // namespace linsia

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

#include "linsia/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

#include "text_util.hpp"

namespace linsia {

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

Graph Graph::from_edges(std::size_t num_nodes, std::span<const Edge> edges,
                        std::vector<std::string> aliases) {
  if (num_nodes > std::numeric_limits<NodeId>::max()) {
    throw Error("graph too large");
  }
  if (!aliases.empty() && aliases.size() != num_nodes) {
    throw Error("alias count does not match node count");
  }

  std::vector<Edge> sorted;
  sorted.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= num_nodes || e.v >= num_nodes) {
      throw Error("edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw Error("self-loop on node " + std::to_string(e.u));
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw Error("edge weight must be positive and finite");
    }
    sorted.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.weight});
  }
  // Stable sort keeps the merge sum in input order for each pair.
  std::stable_sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  std::vector<Edge> merged;
  merged.reserve(sorted.size());
  for (const Edge& e : sorted) {
    if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v) {
      merged.back().weight += e.weight;
    } else {
      merged.push_back(e);
    }
  }

  Graph g;
  std::vector<std::size_t> degree(num_nodes, 0);
  for (const Edge& e : merged) {
    ++degree[e.u];
    ++degree[e.v];
  }
  g.offsets_.assign(num_nodes + 1, 0);
  for (std::size_t i = 0; i < num_nodes; ++i) g.offsets_[i + 1] = g.offsets_[i] + degree[i];
  g.adjacency_.resize(g.offsets_[num_nodes]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : merged) {
    g.adjacency_[cursor[e.u]++] = {e.v, e.weight};
    g.adjacency_[cursor[e.v]++] = {e.u, e.weight};
    g.total_weight_ += e.weight;
  }
  for (std::size_t i = 0; i < num_nodes; ++i) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]),
              [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
  }

  if (aliases.empty()) {
    aliases.reserve(num_nodes);
    for (std::size_t i = 0; i < num_nodes; ++i) aliases.push_back(std::to_string(i));
  }
  g.aliases_ = std::move(aliases);
  g.alias_index_.reserve(num_nodes);
  for (std::size_t i = 0; i < num_nodes; ++i) {
    if (!g.alias_index_.emplace(g.aliases_[i], static_cast<NodeId>(i)).second) {
      throw Error("duplicate node alias '" + g.aliases_[i] + "'");
    }
  }
  return g;
}

double Graph::weighted_degree(NodeId node) const {
  double sum = 0.0;
  for (const Neighbor& n : neighbors(node)) sum += n.weight;
  return sum;
}

double Graph::weight(NodeId u, NodeId v) const {
  auto nbrs = neighbors(u);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                             [](const Neighbor& n, NodeId id) { return n.id < id; });
  return (it != nbrs.end() && it->id == v) ? it->weight : 0.0;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (NodeId u = 0; u < num_nodes(); ++u) {
    for (const Neighbor& n : neighbors(u)) {
      if (u < n.id) out.push_back({u, n.id, n.weight});
    }
  }
  return out;
}

std::optional<NodeId> Graph::find(std::string_view alias) const {
  auto it = alias_index_.find(std::string(alias));
  if (it == alias_index_.end()) return std::nullopt;
  return it->second;
}

namespace {

struct RawEdge {
  std::string u;
  std::string v;
  double weight;
  std::size_t line;
};

}  // namespace

Graph load_edge_list(std::istream& in, EdgeListFormat format) {
  std::vector<RawEdge> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::split_fields(line);
    if (tokens.empty() || tokens.front().starts_with('#')) continue;
    if (tokens.size() < 2 || tokens.size() > 3) {
      throw ParseError(line_no, "expected 'u v [w]', got " + std::to_string(tokens.size()) +
                                    " field(s)");
    }
    double w = 1.0;
    if (tokens.size() == 3) {
      auto parsed = detail::parse_double(tokens[2]);
      if (!parsed) throw ParseError(line_no, "malformed weight '" + std::string(tokens[2]) + "'");
      w = *parsed;
      if (!(w > 0.0) || !std::isfinite(w)) {
        throw ParseError(line_no, "edge weight must be positive, got " + std::string(tokens[2]));
      }
    }
    if (tokens[0] == tokens[1]) {
      throw ParseError(line_no, "self-loop on node '" + std::string(tokens[0]) + "'");
    }
    raw.push_back({std::string(tokens[0]), std::string(tokens[1]), w, line_no});
  }
  if (raw.empty()) throw Error("edge list is empty");

  // All-integer inputs keep numeric order; otherwise ids follow first appearance.
  bool numeric = std::all_of(raw.begin(), raw.end(), [](const RawEdge& e) {
    return detail::parse_index(e.u).has_value() && detail::parse_index(e.v).has_value();
  });
  std::vector<std::string> aliases;
  std::unordered_map<std::string, NodeId> ids;
  auto intern = [&](const std::string& token) {
    auto [it, inserted] = ids.emplace(token, static_cast<NodeId>(aliases.size()));
    if (inserted) aliases.push_back(token);
    return it->second;
  };
  if (numeric) {
    std::set<std::uint64_t> values;
    for (RawEdge& e : raw) {
      // Canonical spelling, so "007" and "7" name the same node.
      e.u = std::to_string(*detail::parse_index(e.u));
      e.v = std::to_string(*detail::parse_index(e.v));
      values.insert(*detail::parse_index(e.u));
      values.insert(*detail::parse_index(e.v));
    }
    for (std::uint64_t v : values) intern(std::to_string(v));
  }

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  std::set<std::pair<NodeId, NodeId>> seen;
  for (const RawEdge& e : raw) {
    NodeId u = intern(e.u);
    NodeId v = intern(e.v);
    if (u == v) throw ParseError(e.line, "self-loop on node '" + e.u + "'");
    if (format == EdgeListFormat::kLfr) {
      // network.dat lists every undirected edge once per direction.
      if (!seen.emplace(std::min(u, v), std::max(u, v)).second) continue;
    }
    edges.push_back({u, v, e.weight});
  }
  const std::size_t n = aliases.size();
  return Graph::from_edges(n, edges, std::move(aliases));
}

Graph load_edge_list_file(const std::filesystem::path& path, EdgeListFormat format) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return load_edge_list(in, format);
}

std::string write_edge_list(const Graph& graph) {
  std::ostringstream out;
  out.precision(17);
  for (const Edge& e : graph.edges()) {
    out << graph.alias(e.u) << ' ' << graph.alias(e.v) << ' ' << e.weight << '\n';
  }
  return out.str();
}

}  // namespace linsia

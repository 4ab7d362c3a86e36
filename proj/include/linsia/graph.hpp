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

#ifndef LINSIA_GRAPH_HPP_
#define LINSIA_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace linsia {

using NodeId = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by the text loaders; carries the 1-based line that failed.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 1.0;
};

struct Neighbor {
  NodeId id = 0;
  double weight = 1.0;
};

// Undirected, weighted, simple graph in compressed adjacency form.
// Immutable once built. Neighbor lists are sorted by ascending id, which fixes
// the summation order of every per-node aggregate computed over them.
class Graph {
 public:
  Graph() = default;

  // Builds a graph over nodes 0..num_nodes-1. Duplicate edges are merged by
  // summing their weights. Self-loops, out-of-range ids and non-positive or
  // non-finite weights throw Error. `aliases` is either empty (ids are used as
  // names) or holds exactly one unique name per node.
  static Graph from_edges(std::size_t num_nodes, std::span<const Edge> edges,
                          std::vector<std::string> aliases = {});

  std::size_t num_nodes() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return adjacency_.size() / 2; }

  std::span<const Neighbor> neighbors(NodeId node) const {
    return {adjacency_.data() + offsets_[node], adjacency_.data() + offsets_[node + 1]};
  }

  // Neighbor count, not the weighted sum.
  std::size_t degree(NodeId node) const { return offsets_[node + 1] - offsets_[node]; }
  double weighted_degree(NodeId node) const;
  double total_weight() const { return total_weight_; }

  // Weight of edge (u, v), or 0 when absent.
  double weight(NodeId u, NodeId v) const;
  bool has_edge(NodeId u, NodeId v) const { return weight(u, v) > 0.0; }

  // Edges with u < v in ascending (u, v) order.
  std::vector<Edge> edges() const;

  const std::string& alias(NodeId node) const { return aliases_[node]; }
  std::optional<NodeId> find(std::string_view alias) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
  std::vector<std::string> aliases_;
  std::unordered_map<std::string, NodeId> alias_index_;
  double total_weight_ = 0.0;
};

enum class EdgeListFormat {
  kPlain,  // `u v [w]`, duplicates summed
  kLfr,    // LFR network.dat, each edge listed in both directions
};

Graph load_edge_list(std::istream& in, EdgeListFormat format = EdgeListFormat::kPlain);
Graph load_edge_list_file(const std::filesystem::path& path,
                          EdgeListFormat format = EdgeListFormat::kPlain);

// Plain `u v w` lines using the graph's aliases; reloadable with load_edge_list.
std::string write_edge_list(const Graph& graph);

}  // namespace linsia

#endif  // LINSIA_GRAPH_HPP_

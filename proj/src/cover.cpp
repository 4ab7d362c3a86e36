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

#include "linsia/cover.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>

#include "text_util.hpp"

namespace linsia {

void canonicalize_communities(std::vector<Community>& communities, std::vector<NodeId>* keys) {
  for (Community& c : communities) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  std::vector<std::size_t> order(communities.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (communities[a] != communities[b]) return communities[a] < communities[b];
    if (keys != nullptr) return (*keys)[a] < (*keys)[b];
    return a < b;
  });
  std::vector<Community> sorted;
  std::vector<NodeId> sorted_keys;
  sorted.reserve(order.size());
  for (std::size_t idx : order) {
    if (!sorted.empty() && sorted.back() == communities[idx]) continue;
    sorted.push_back(std::move(communities[idx]));
    if (keys != nullptr) sorted_keys.push_back((*keys)[idx]);
  }
  communities = std::move(sorted);
  if (keys != nullptr) *keys = std::move(sorted_keys);
}

Cover::Cover(std::size_t num_nodes, std::vector<Community> communities) {
  canonicalize_communities(communities);
  membership_.assign(num_nodes, {});
  for (std::size_t c = 0; c < communities.size(); ++c) {
    if (communities[c].empty()) throw Error("cover contains an empty community");
    for (NodeId node : communities[c]) {
      if (node >= num_nodes) {
        throw Error("cover names node " + std::to_string(node) + " outside the graph");
      }
      membership_[node].push_back(c);
    }
  }
  for (std::size_t i = 0; i < num_nodes; ++i) {
    if (membership_[i].empty()) {
      throw Error("node " + std::to_string(i) + " belongs to no community");
    }
  }
  communities_ = std::move(communities);
}

Cover Cover::from_assignment(std::span<const std::size_t> community_of) {
  std::map<std::size_t, Community> groups;
  for (std::size_t i = 0; i < community_of.size(); ++i) {
    groups[community_of[i]].push_back(static_cast<NodeId>(i));
  }
  std::vector<Community> communities;
  communities.reserve(groups.size());
  for (auto& [key, members] : groups) communities.push_back(std::move(members));
  return Cover(community_of.size(), std::move(communities));
}

bool Cover::is_disjoint() const {
  return std::all_of(membership_.begin(), membership_.end(),
                     [](const auto& m) { return m.size() == 1; });
}

Cover load_community_file(std::istream& in, const Graph& graph) {
  std::map<std::string, Community, std::less<>> groups;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::split_fields(line);
    if (tokens.empty() || tokens.front().starts_with('#')) continue;
    if (tokens.size() < 2) throw ParseError(line_no, "expected 'node community...'");
    auto node = graph.find(tokens[0]);
    if (!node && detail::parse_index(tokens[0])) {
      node = graph.find(std::to_string(*detail::parse_index(tokens[0])));
    }
    if (!node) {
      throw ParseError(line_no, "node '" + std::string(tokens[0]) + "' is not in the graph");
    }
    for (std::size_t k = 1; k < tokens.size(); ++k) {
      groups[std::string(tokens[k])].push_back(*node);
    }
  }
  std::vector<Community> communities;
  communities.reserve(groups.size());
  for (auto& [id, members] : groups) communities.push_back(std::move(members));
  return Cover(graph.num_nodes(), std::move(communities));
}

Cover load_community_file(const std::filesystem::path& path, const Graph& graph) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return load_community_file(in, graph);
}

std::string write_community_file(const Cover& cover, const Graph& graph) {
  std::ostringstream out;
  for (NodeId i = 0; i < cover.num_nodes(); ++i) {
    out << graph.alias(i);
    for (std::size_t c : cover.memberships(i)) out << ' ' << c;
    out << '\n';
  }
  return out.str();
}

}  // namespace linsia

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

#ifndef LINSIA_COVER_HPP_
#define LINSIA_COVER_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "linsia/graph.hpp"

namespace linsia {

using Community = std::vector<NodeId>;

// A division of nodes 0..n-1 into possibly overlapping communities.
//
// Stored canonically: members ascending within each community, communities in
// lexicographic order, no duplicates. Two covers describing the same division
// therefore compare equal.
class Cover {
 public:
  Cover() = default;

  // Throws Error if a community is empty, names a node >= num_nodes, or some
  // node is left uncovered. Duplicate communities are collapsed.
  Cover(std::size_t num_nodes, std::vector<Community> communities);

  // Disjoint cover from a per-node community key; keys need not be contiguous.
  static Cover from_assignment(std::span<const std::size_t> community_of);

  std::size_t num_nodes() const { return membership_.size(); }
  std::size_t size() const { return communities_.size(); }
  const std::vector<Community>& communities() const { return communities_; }
  const Community& operator[](std::size_t index) const { return communities_[index]; }

  // Indices of the communities containing `node`, ascending.
  const std::vector<std::size_t>& memberships(NodeId node) const { return membership_[node]; }
  bool is_disjoint() const;

  friend bool operator==(const Cover& a, const Cover& b) {
    return a.membership_.size() == b.membership_.size() && a.communities_ == b.communities_;
  }

 private:
  std::vector<Community> communities_;
  std::vector<std::vector<std::size_t>> membership_;
};

// Sorts members and communities into the canonical Cover order and removes
// duplicates. `keys`, if non-empty, is permuted alongside; for a duplicated
// community the smallest key survives.
void canonicalize_communities(std::vector<Community>& communities,
                              std::vector<NodeId>* keys = nullptr);

// `node community [community...]` per line (LFR community.dat). Node tokens
// resolve through the graph's aliases; community ids are arbitrary tokens.
Cover load_community_file(std::istream& in, const Graph& graph);
Cover load_community_file(const std::filesystem::path& path, const Graph& graph);

// Inverse of load_community_file; community ids are the cover indices.
std::string write_community_file(const Cover& cover, const Graph& graph);

}  // namespace linsia

#endif  // LINSIA_COVER_HPP_

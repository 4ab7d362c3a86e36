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

#ifndef LINSIA_HIERARCHY_HPP_
#define LINSIA_HIERARCHY_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "linsia/cover.hpp"
#include "linsia/graph.hpp"
#include "linsia/metrics.hpp"
#include "linsia/propagation.hpp"

namespace linsia {

// Coarsens `graph` to one node per community of `cover` (super-node i is
// community i). Communities a and b are joined when some primitive edge runs
// from a member of a to a member of b, with weight
//
//   sum_{m in a, n in b} w(m, n) / (len(m) * len(n))  /  N(a, b)
//
// where len(x) is the number of communities holding x and N(a, b) counts the
// distinct nodes that are endpoints of those crossing edges.
Graph build_super_network(const Graph& graph, const Cover& cover);

struct Level {
  Cover cover;                       // over primitive nodes
  std::vector<Label> labels;         // label carried by each community of `cover`
  std::vector<std::size_t> parent;   // previous level's community -> community here
  Graph super_network;               // built from `cover`
  double alpha = 1.0;                // alpha used by the detection that produced `cover`
  std::size_t sweeps = 0;
  bool converged = true;
};

struct Hierarchy {
  std::vector<Level> levels;
  // Level-0 label state; labels map into level 0 through `label_community`.
  LabelState base_state;
  std::vector<std::size_t> label_community;  // label -> level-0 community, or npos

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // Community at `level` that level-0 community `base` merged into.
  std::size_t community_at(std::size_t base, std::size_t level) const;
};

struct HierarchyOptions {
  PropagationOptions propagation;
  // Reuse the primitive graph's alpha on every super-network.
  bool freeze_alpha = false;
  // Upper bound on levels, including level 0.
  std::size_t max_levels = 64;
};

// Level 0 comes from propagation on the primitive graph (or `seed` when
// given); each next level runs disjoint propagation on the super-network of
// the previous one and projects the merges back to primitive nodes. Stops when
// the community count no longer drops or one community remains.
Hierarchy detect_hierarchy(const Graph& graph, const HierarchyOptions& options,
                           const std::optional<Cover>& seed = std::nullopt);

struct Division {
  std::size_t best = 0;
  std::size_t subc = 0;
  std::vector<double> scores;
  Metric metric = Metric::kQ;
};

// Best = argmax score, ties to the higher level. Subc = argmax over levels
// strictly below best (ties to the higher one), or best itself at level 0.
Division select_division(std::span<const double> scores);

// Scores every level with Q (disjoint mode and covers) or EQ, then applies
// select_division.
Division best_division(const Hierarchy& hierarchy, const Graph& graph, Mode mode,
                       bool weighted = false);

}  // namespace linsia

#endif  // LINSIA_HIERARCHY_HPP_

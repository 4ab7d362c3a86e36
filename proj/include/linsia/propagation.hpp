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

#ifndef LINSIA_PROPAGATION_HPP_
#define LINSIA_PROPAGATION_HPP_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "linsia/cover.hpp"
#include "linsia/graph.hpp"
#include "linsia/influence.hpp"

namespace linsia {

// Labels are the ids of the nodes that originally carried them.
using Label = NodeId;

enum class Mode { kDisjoint, kOverlapping };

Mode parse_mode(std::string_view name);
std::string_view to_string(Mode mode);

struct LabelEntry {
  Label label = 0;
  double influence = 0.0;

  friend bool operator==(const LabelEntry&, const LabelEntry&) = default;
};

// Labels held by one node, sorted by label id.
using LabelSet = std::vector<LabelEntry>;

// 10^(-1/3): a candidate is kept in overlapping mode when its influence is
// within one order of magnitude of the maximum on the cubed scale.
inline constexpr double kDefaultOverlapRatio = 0.4641588833612779;

struct LabelState {
  std::vector<LabelSet> labels;
  std::vector<Label> initial_label;
  Mode mode = Mode::kDisjoint;
  std::size_t sweeps = 0;
  bool converged = false;

  std::size_t num_nodes() const { return labels.size(); }
  double total_influence(NodeId node) const;

  friend bool operator==(const LabelState&, const LabelState&) = default;
};

// Node i gets label i with `initial_influence`; throws Error unless positive.
LabelState init_labels(const Graph& graph, Mode mode, double initial_influence = 1.0);

// Label influence of every candidate label at `node`, read from the current
// state. Each neighbor j votes NI(j) / degree(j)^alpha * w(i, j), split across
// its labels in proportion to their share of j's total. Sorted by label; empty
// for an isolated node.
LabelSet label_influences(const LabelState& state, NodeId node, const InfluenceTable& influence,
                          const Graph& graph);

// Disjoint: the argmax, preferring a label in `current` on ties and then the
// smallest id. Overlapping: every candidate above max * overlap_ratio plus the
// argmax. Empty `li` keeps `current`. Returned entries carry their LI values.
LabelSet select_labels(std::span<const LabelEntry> li, Mode mode,
                       std::span<const LabelEntry> current,
                       double overlap_ratio = kDefaultOverlapRatio);

// Nodes by ascending NI, ties by ascending id.
std::vector<NodeId> sweep_order(std::span<const double> node_influence);

struct PropagationOptions {
  Mode mode = Mode::kDisjoint;
  double initial_influence = 1.0;
  std::size_t max_sweeps = 100;
  double overlap_ratio = kDefaultOverlapRatio;
};

// Asynchronous sweeps in the fixed sweep_order until no node's label set
// changes over a full sweep, or max_sweeps. Selected labels are stored with
// their LI values rescaled to the node's previous total influence.
LabelState propagate(const Graph& graph, const InfluenceTable& influence,
                     const PropagationOptions& options);

// Groups nodes by held label; a node with k labels sits in k communities.
Cover cover_from_labels(const LabelState& state);

}  // namespace linsia

#endif  // LINSIA_PROPAGATION_HPP_

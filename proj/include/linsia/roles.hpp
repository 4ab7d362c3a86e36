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

#ifndef LINSIA_ROLES_HPP_
#define LINSIA_ROLES_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "linsia/cover.hpp"
#include "linsia/graph.hpp"
#include "linsia/hierarchy.hpp"
#include "linsia/propagation.hpp"

namespace linsia {

enum class HubRule {
  kText,     // at least two labels
  kFormula,  // at least one label, i.e. every labelled node
};

HubRule parse_hub_rule(std::string_view name);

std::vector<NodeId> find_hubs(const LabelState& state, HubRule rule = HubRule::kText);

// Single-label nodes of degree <= 2 whose label is the initial label of the
// node itself or of one of its neighbors.
std::vector<NodeId> find_outliers(const LabelState& state, const Graph& graph);

// Share of each held label in the node's total influence.
LabelSet participation_intensity(const LabelState& state, NodeId node);

// Re-expresses the level-0 label state in terms of the communities at
// `level`: each level-0 label becomes the label of the community it merged
// into, and influences of labels that merged are summed.
LabelState project_state(const Hierarchy& hierarchy, std::size_t level);

enum class Role { kMember, kHub, kOutlier };
std::string_view to_string(Role role);

struct StructureReport {
  Mode mode = Mode::kDisjoint;
  std::size_t best_level = 0;
  std::size_t subc_level = 0;
  Cover best_cover;
  Cover subc_cover;
  std::vector<Label> best_labels;  // label of each best_cover community
  std::vector<NodeId> hubs;
  std::vector<NodeId> outliers;
  std::vector<LabelSet> intensity;  // per node, label -> share in (0, 1]
  std::map<std::string, double> metrics;
  double alpha = 1.0;
  std::size_t sweeps = 0;
  bool converged = true;

  Role role(NodeId node) const;
};

// Roles and intensities read from the level-0 state projected onto the best
// level of `division`.
StructureReport assemble_report(const Graph& graph, const Hierarchy& hierarchy,
                                const Division& division, Mode mode,
                                HubRule hub_rule = HubRule::kText);

struct AnalysisOptions {
  HierarchyOptions hierarchy;
  HubRule hub_rule = HubRule::kText;
  bool weighted_modularity = false;
};

// Hierarchy, division selection and role extraction in one call.
StructureReport analyze(const Graph& graph, const AnalysisOptions& options,
                        const std::optional<Cover>& seed = std::nullopt);

}  // namespace linsia

#endif  // LINSIA_ROLES_HPP_

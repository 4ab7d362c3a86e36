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

#include "linsia/roles.hpp"

#include <algorithm>
#include <string>

#include "linsia/metrics.hpp"

namespace linsia {

HubRule parse_hub_rule(std::string_view name) {
  if (name == "text") return HubRule::kText;
  if (name == "formula") return HubRule::kFormula;
  throw Error("unknown hub rule '" + std::string(name) + "' (expected text or formula)");
}

std::vector<NodeId> find_hubs(const LabelState& state, HubRule rule) {
  const std::size_t min_labels = rule == HubRule::kText ? 2 : 1;
  std::vector<NodeId> hubs;
  for (NodeId i = 0; i < state.num_nodes(); ++i) {
    if (state.labels[i].size() >= min_labels) hubs.push_back(i);
  }
  return hubs;
}

std::vector<NodeId> find_outliers(const LabelState& state, const Graph& graph) {
  std::vector<NodeId> outliers;
  for (NodeId i = 0; i < state.num_nodes(); ++i) {
    if (state.labels[i].size() != 1 || graph.degree(i) > 2) continue;
    const Label label = state.labels[i].front().label;
    bool local = state.initial_label[i] == label;
    for (const Neighbor& nb : graph.neighbors(i)) {
      local = local || state.initial_label[nb.id] == label;
    }
    if (local) outliers.push_back(i);
  }
  return outliers;
}

LabelSet participation_intensity(const LabelState& state, NodeId node) {
  const double total = state.total_influence(node);
  LabelSet out = state.labels[node];
  for (LabelEntry& e : out) e.influence /= total;
  return out;
}

LabelState project_state(const Hierarchy& hierarchy, std::size_t level) {
  const Level& target = hierarchy.levels.at(level);
  LabelState out = hierarchy.base_state;
  for (LabelSet& set : out.labels) {
    LabelSet mapped;
    for (const LabelEntry& e : set) {
      const std::size_t base = hierarchy.label_community[e.label];
      mapped.push_back({target.labels[hierarchy.community_at(base, level)], e.influence});
    }
    std::stable_sort(mapped.begin(), mapped.end(),
                     [](const LabelEntry& a, const LabelEntry& b) { return a.label < b.label; });
    set.clear();
    for (const LabelEntry& e : mapped) {
      if (!set.empty() && set.back().label == e.label) {
        set.back().influence += e.influence;
      } else {
        set.push_back(e);
      }
    }
  }
  return out;
}

std::string_view to_string(Role role) {
  switch (role) {
    case Role::kMember: return "member";
    case Role::kHub: return "hub";
    case Role::kOutlier: return "outlier";
  }
  return "member";
}

Role StructureReport::role(NodeId node) const {
  if (std::binary_search(hubs.begin(), hubs.end(), node)) return Role::kHub;
  if (std::binary_search(outliers.begin(), outliers.end(), node)) return Role::kOutlier;
  return Role::kMember;
}

StructureReport assemble_report(const Graph& graph, const Hierarchy& hierarchy,
                                const Division& division, Mode mode, HubRule hub_rule) {
  StructureReport report;
  report.mode = mode;
  report.best_level = division.best;
  report.subc_level = division.subc;
  report.best_cover = hierarchy.levels[division.best].cover;
  report.subc_cover = hierarchy.levels[division.subc].cover;
  report.best_labels = hierarchy.levels[division.best].labels;
  report.alpha = hierarchy.levels.front().alpha;
  report.sweeps = hierarchy.base_state.sweeps;
  report.converged = hierarchy.base_state.converged;

  const LabelState projected = project_state(hierarchy, division.best);
  report.hubs = find_hubs(projected, hub_rule);
  report.outliers = find_outliers(projected, graph);
  report.intensity.reserve(graph.num_nodes());
  for (NodeId i = 0; i < graph.num_nodes(); ++i) {
    report.intensity.push_back(participation_intensity(projected, i));
  }

  const std::string metric(to_string(division.metric));
  report.metrics[metric] = division.scores[division.best];
  report.metrics[metric + "_subc"] = division.scores[division.subc];
  report.metrics["communities"] = static_cast<double>(report.best_cover.size());
  return report;
}

StructureReport analyze(const Graph& graph, const AnalysisOptions& options,
                        const std::optional<Cover>& seed) {
  const Hierarchy hierarchy = detect_hierarchy(graph, options.hierarchy, seed);
  const Mode mode = options.hierarchy.propagation.mode;
  const Division division = best_division(hierarchy, graph, mode, options.weighted_modularity);
  return assemble_report(graph, hierarchy, division, mode, options.hub_rule);
}

}  // namespace linsia

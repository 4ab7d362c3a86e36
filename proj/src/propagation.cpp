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

#include "linsia/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

namespace linsia {

Mode parse_mode(std::string_view name) {
  if (name == "disjoint") return Mode::kDisjoint;
  if (name == "overlapping") return Mode::kOverlapping;
  throw Error("unknown mode '" + std::string(name) + "' (expected disjoint or overlapping)");
}

std::string_view to_string(Mode mode) {
  return mode == Mode::kDisjoint ? "disjoint" : "overlapping";
}

double LabelState::total_influence(NodeId node) const {
  double sum = 0.0;
  for (const LabelEntry& e : labels[node]) sum += e.influence;
  return sum;
}

LabelState init_labels(const Graph& graph, Mode mode, double initial_influence) {
  if (!(initial_influence > 0.0) || !std::isfinite(initial_influence)) {
    throw Error("initial label influence must be positive and finite");
  }
  LabelState state;
  state.mode = mode;
  state.labels.resize(graph.num_nodes());
  state.initial_label.resize(graph.num_nodes());
  for (NodeId i = 0; i < graph.num_nodes(); ++i) {
    state.labels[i] = {{i, initial_influence}};
    state.initial_label[i] = i;
  }
  return state;
}

LabelSet label_influences(const LabelState& state, NodeId node, const InfluenceTable& influence,
                          const Graph& graph) {
  LabelSet votes;
  for (const Neighbor& nb : graph.neighbors(node)) {
    const NodeId j = nb.id;
    const double strength = influence.node_influence[j] /
                            std::pow(static_cast<double>(graph.degree(j)), influence.alpha) *
                            nb.weight;
    const double total = state.total_influence(j);
    for (const LabelEntry& e : state.labels[j]) {
      votes.push_back({e.label, strength * (e.influence / total)});
    }
  }
  // Stable, so each label's contributions are summed in neighbor order.
  std::stable_sort(votes.begin(), votes.end(),
                   [](const LabelEntry& a, const LabelEntry& b) { return a.label < b.label; });
  LabelSet merged;
  for (const LabelEntry& v : votes) {
    if (!merged.empty() && merged.back().label == v.label) {
      merged.back().influence += v.influence;
    } else {
      merged.push_back(v);
    }
  }
  return merged;
}

namespace {

bool holds(std::span<const LabelEntry> set, Label label) {
  auto it = std::lower_bound(set.begin(), set.end(), label,
                             [](const LabelEntry& e, Label l) { return e.label < l; });
  return it != set.end() && it->label == label;
}

std::size_t argmax(std::span<const LabelEntry> li, std::span<const LabelEntry> current) {
  double best = li[0].influence;
  for (const LabelEntry& e : li) best = std::max(best, e.influence);
  std::size_t pick = li.size();
  for (std::size_t k = 0; k < li.size(); ++k) {
    if (li[k].influence != best) continue;
    if (holds(current, li[k].label)) return k;
    if (pick == li.size()) pick = k;
  }
  return pick;
}

}  // namespace

LabelSet select_labels(std::span<const LabelEntry> li, Mode mode,
                       std::span<const LabelEntry> current, double overlap_ratio) {
  if (li.empty()) return LabelSet(current.begin(), current.end());
  const std::size_t top = argmax(li, current);
  if (mode == Mode::kDisjoint) return {li[top]};

  const double threshold = li[top].influence * overlap_ratio;
  LabelSet out;
  for (std::size_t k = 0; k < li.size(); ++k) {
    if (k == top || li[k].influence > threshold) out.push_back(li[k]);
  }
  return out;
}

std::vector<NodeId> sweep_order(std::span<const double> node_influence) {
  std::vector<NodeId> order(node_influence.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    if (node_influence[a] != node_influence[b]) return node_influence[a] < node_influence[b];
    return a < b;
  });
  return order;
}

LabelState propagate(const Graph& graph, const InfluenceTable& influence,
                     const PropagationOptions& options) {
  LabelState state = init_labels(graph, options.mode, options.initial_influence);
  const std::vector<NodeId> order = sweep_order(influence.node_influence);

  while (state.sweeps < options.max_sweeps) {
    ++state.sweeps;
    bool changed = false;
    for (NodeId node : order) {
      LabelSet li = label_influences(state, node, influence, graph);
      if (li.empty()) continue;
      LabelSet& current = state.labels[node];
      LabelSet selected = select_labels(li, options.mode, current, options.overlap_ratio);

      const double previous_total = state.total_influence(node);
      double selected_total = 0.0;
      for (const LabelEntry& e : selected) selected_total += e.influence;
      for (LabelEntry& e : selected) e.influence = previous_total * (e.influence / selected_total);

      bool same_set = selected.size() == current.size() &&
                      std::equal(selected.begin(), selected.end(), current.begin(),
                                 [](const LabelEntry& a, const LabelEntry& b) {
                                   return a.label == b.label;
                                 });
      changed = changed || !same_set;
      current = std::move(selected);
    }
    if (!changed) {
      state.converged = true;
      break;
    }
  }
  return state;
}

Cover cover_from_labels(const LabelState& state) {
  std::map<Label, Community> groups;
  for (NodeId i = 0; i < state.num_nodes(); ++i) {
    for (const LabelEntry& e : state.labels[i]) groups[e.label].push_back(i);
  }
  std::vector<Community> communities;
  communities.reserve(groups.size());
  for (auto& [label, members] : groups) communities.push_back(std::move(members));
  return Cover(state.num_nodes(), std::move(communities));
}

}  // namespace linsia

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

#include "linsia/hierarchy.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>

#include "linsia/influence.hpp"

namespace linsia {

Graph build_super_network(const Graph& graph, const Cover& cover) {
  if (cover.num_nodes() != graph.num_nodes()) {
    throw Error("cover and graph differ in node count");
  }

  struct Term {
    std::uint64_t pair;
    double value;
  };
  struct Endpoint {
    std::uint64_t pair;
    NodeId node;
  };
  auto key = [](std::size_t a, std::size_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
  };

  // Every ordered adjacency (m, n) with m in community a and n in community
  // b, a < b, is one term of the (a, b) sum.
  std::vector<Term> terms;
  std::vector<Endpoint> endpoints;
  for (NodeId m = 0; m < graph.num_nodes(); ++m) {
    const auto& from = cover.memberships(m);
    const double len_m = static_cast<double>(from.size());
    for (const Neighbor& nb : graph.neighbors(m)) {
      const auto& to = cover.memberships(nb.id);
      const double len_n = static_cast<double>(to.size());
      for (std::size_t a : from) {
        for (std::size_t b : to) {
          if (a >= b) continue;
          terms.push_back({key(a, b), nb.weight / (len_m * len_n)});
          endpoints.push_back({key(a, b), m});
          endpoints.push_back({key(a, b), nb.id});
        }
      }
    }
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& x, const Term& y) { return x.pair < y.pair; });
  std::sort(endpoints.begin(), endpoints.end(), [](const Endpoint& x, const Endpoint& y) {
    return std::pair(x.pair, x.node) < std::pair(y.pair, y.node);
  });
  endpoints.erase(std::unique(endpoints.begin(), endpoints.end(),
                              [](const Endpoint& x, const Endpoint& y) {
                                return x.pair == y.pair && x.node == y.node;
                              }),
                  endpoints.end());

  std::vector<Edge> edges;
  std::size_t t = 0;
  std::size_t e = 0;
  while (t < terms.size()) {
    const std::uint64_t pair = terms[t].pair;
    double sum = 0.0;
    for (; t < terms.size() && terms[t].pair == pair; ++t) sum += terms[t].value;
    std::size_t touching = 0;
    for (; e < endpoints.size() && endpoints[e].pair == pair; ++e) ++touching;
    edges.push_back({static_cast<NodeId>(pair >> 32), static_cast<NodeId>(pair & 0xffffffffu),
                     sum / static_cast<double>(touching)});
  }
  return Graph::from_edges(cover.size(), edges);
}

std::size_t Hierarchy::community_at(std::size_t base, std::size_t level) const {
  std::size_t c = base;
  for (std::size_t t = 1; t <= level; ++t) c = levels[t].parent[c];
  return c;
}

namespace {

// Position of `community` in a canonical, sorted community list.
std::size_t locate(const std::vector<Community>& sorted, const Community& community) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), community);
  return static_cast<std::size_t>(it - sorted.begin());
}

void build_base_level(const Graph& graph, const LabelState& state, Hierarchy& h, Level& level) {
  std::map<Label, Community> groups;
  for (NodeId i = 0; i < state.num_nodes(); ++i) {
    for (const LabelEntry& e : state.labels[i]) groups[e.label].push_back(i);
  }
  std::vector<Community> communities;
  std::vector<Label> labels;
  for (auto& [label, members] : groups) {
    labels.push_back(label);
    communities.push_back(members);
  }
  std::vector<Community> canonical = communities;
  canonicalize_communities(canonical, &labels);

  h.label_community.assign(graph.num_nodes(), Hierarchy::npos);
  std::size_t k = 0;
  for (const auto& [label, members] : groups) {
    h.label_community[label] = locate(canonical, communities[k++]);
  }
  level.labels = std::move(labels);
  level.cover = Cover(graph.num_nodes(), std::move(canonical));
}

LabelState state_from_seed(const Graph& graph, const Cover& seed, std::span<const Label> labels,
                           const PropagationOptions& options) {
  LabelState state;
  state.mode = options.mode;
  state.converged = true;
  state.labels.resize(graph.num_nodes());
  state.initial_label.resize(graph.num_nodes());
  for (NodeId i = 0; i < graph.num_nodes(); ++i) {
    state.initial_label[i] = i;
    const auto& member_of = seed.memberships(i);
    const double share = options.initial_influence / static_cast<double>(member_of.size());
    for (std::size_t c : member_of) state.labels[i].push_back({labels[c], share});
    std::sort(state.labels[i].begin(), state.labels[i].end(),
              [](const LabelEntry& a, const LabelEntry& b) { return a.label < b.label; });
  }
  return state;
}

}  // namespace

Hierarchy detect_hierarchy(const Graph& graph, const HierarchyOptions& options,
                           const std::optional<Cover>& seed) {
  if (graph.num_nodes() == 0) throw Error("cannot detect communities in an empty graph");
  Hierarchy h;
  const InfluenceTable base_influence = compute_influence(graph);

  Level base;
  base.alpha = base_influence.alpha;
  if (seed) {
    if (seed->num_nodes() != graph.num_nodes()) {
      throw Error("seed cover and graph differ in node count");
    }
    base.cover = *seed;
    // Each community is named after its smallest member not already naming
    // another one, keeping labels unique under overlap.
    std::vector<bool> used(graph.num_nodes(), false);
    for (const Community& c : seed->communities()) {
      auto free = std::find_if(c.begin(), c.end(), [&](NodeId v) { return !used[v]; });
      if (free == c.end()) throw Error("seed cover has more communities than it can label");
      used[*free] = true;
      base.labels.push_back(*free);
    }
    h.base_state = state_from_seed(graph, *seed, base.labels, options.propagation);
    h.label_community.assign(graph.num_nodes(), Hierarchy::npos);
    for (std::size_t c = 0; c < base.labels.size(); ++c) h.label_community[base.labels[c]] = c;
  } else {
    h.base_state = propagate(graph, base_influence, options.propagation);
    base.sweeps = h.base_state.sweeps;
    base.converged = h.base_state.converged;
    build_base_level(graph, h.base_state, h, base);
  }
  h.levels.push_back(std::move(base));

  PropagationOptions upper = options.propagation;
  upper.mode = Mode::kDisjoint;
  while (true) {
    Level& current = h.levels.back();
    current.super_network = build_super_network(graph, current.cover);
    if (current.cover.size() <= 1 || h.levels.size() >= options.max_levels) break;

    const Graph& sn = current.super_network;
    const InfluenceTable influence = compute_influence(
        sn, options.freeze_alpha ? std::optional<double>(base_influence.alpha) : std::nullopt);
    const LabelState merged = propagate(sn, influence, upper);

    // Super-nodes sharing a label merge; the group inherits the community
    // label of the super-node its label came from.
    std::map<Label, std::vector<std::size_t>> groups;
    for (NodeId s = 0; s < sn.num_nodes(); ++s) groups[merged.labels[s].front().label].push_back(s);
    if (groups.size() >= current.cover.size()) break;

    std::vector<Community> communities;
    std::vector<Label> labels;
    std::vector<Community> group_members;
    for (const auto& [winner, supernodes] : groups) {
      Community members;
      for (std::size_t s : supernodes) {
        const Community& c = current.cover[s];
        members.insert(members.end(), c.begin(), c.end());
      }
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      communities.push_back(members);
      group_members.push_back(std::move(members));
      labels.push_back(current.labels[winner]);
    }
    canonicalize_communities(communities, &labels);

    Level next;
    next.alpha = influence.alpha;
    next.sweeps = merged.sweeps;
    next.converged = merged.converged;
    next.parent.assign(current.cover.size(), 0);
    std::size_t g = 0;
    for (const auto& [winner, supernodes] : groups) {
      const std::size_t target = locate(communities, group_members[g++]);
      for (std::size_t s : supernodes) next.parent[s] = target;
    }
    next.labels = std::move(labels);
    next.cover = Cover(graph.num_nodes(), std::move(communities));
    if (next.cover.size() >= current.cover.size()) break;
    h.levels.push_back(std::move(next));
  }
  return h;
}

Division select_division(std::span<const double> scores) {
  if (scores.empty()) throw Error("cannot select a division from an empty hierarchy");
  Division d;
  d.scores.assign(scores.begin(), scores.end());
  for (std::size_t t = 1; t < scores.size(); ++t) {
    if (scores[t] >= scores[d.best]) d.best = t;
  }
  d.subc = d.best;
  if (d.best > 0) {
    d.subc = 0;
    for (std::size_t t = 1; t < d.best; ++t) {
      if (scores[t] >= scores[d.subc]) d.subc = t;
    }
  }
  return d;
}

Division best_division(const Hierarchy& hierarchy, const Graph& graph, Mode mode, bool weighted) {
  bool all_disjoint = std::all_of(hierarchy.levels.begin(), hierarchy.levels.end(),
                                  [](const Level& l) { return l.cover.is_disjoint(); });
  const Metric metric = (mode == Mode::kDisjoint && all_disjoint) ? Metric::kQ : Metric::kEQ;
  std::vector<double> scores;
  scores.reserve(hierarchy.levels.size());
  for (const Level& level : hierarchy.levels) {
    scores.push_back(metric == Metric::kQ
                         ? modularity_q(graph, level.cover, weighted)
                         : extended_modularity_eq(graph, level.cover, weighted));
  }
  Division d = select_division(scores);
  d.metric = metric;
  return d;
}

}  // namespace linsia

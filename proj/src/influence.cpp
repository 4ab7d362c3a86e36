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

#include "linsia/influence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace linsia {

std::vector<std::uint32_t> kshell_decomposition(const Graph& graph) {
  const std::size_t n = graph.num_nodes();
  std::vector<std::uint32_t> core(n, 0);
  if (n == 0) return core;

  std::size_t max_degree = 0;
  for (NodeId i = 0; i < n; ++i) {
    core[i] = static_cast<std::uint32_t>(graph.degree(i));
    max_degree = std::max<std::size_t>(max_degree, core[i]);
  }

  // Batagelj-Zaversnik: nodes kept sorted by current degree in `order`, with
  // `bin_start[d]` the first slot holding degree d.
  std::vector<std::size_t> bin_start(max_degree + 2, 0);
  for (NodeId i = 0; i < n; ++i) ++bin_start[core[i] + 1];
  std::partial_sum(bin_start.begin(), bin_start.end(), bin_start.begin());
  std::vector<NodeId> order(n);
  std::vector<std::size_t> position(n);
  {
    std::vector<std::size_t> fill(bin_start.begin(), bin_start.end() - 1);
    for (NodeId i = 0; i < n; ++i) {
      position[i] = fill[core[i]]++;
      order[position[i]] = i;
    }
  }

  for (std::size_t k = 0; k < n; ++k) {
    NodeId v = order[k];
    for (const Neighbor& nb : graph.neighbors(v)) {
      NodeId u = nb.id;
      if (core[u] > core[v]) {
        std::uint32_t du = core[u];
        std::size_t pu = position[u];
        std::size_t pw = bin_start[du];
        NodeId w = order[pw];
        if (u != w) {
          std::swap(order[pu], order[pw]);
          position[u] = pw;
          position[w] = pu;
        }
        ++bin_start[du];
        --core[u];
      }
    }
  }
  return core;
}

Coreness encoreness(const Graph& graph, std::span<const std::uint32_t> kshell) {
  const std::size_t n = graph.num_nodes();
  Coreness out;
  out.neighborhood.assign(n, 0.0);
  out.extended.assign(n, 0.0);
  for (NodeId i = 0; i < n; ++i) {
    double sum = 0.0;
    for (const Neighbor& nb : graph.neighbors(i)) sum += kshell[nb.id];
    out.neighborhood[i] = sum;
  }
  for (NodeId i = 0; i < n; ++i) {
    double sum = 0.0;
    for (const Neighbor& nb : graph.neighbors(i)) sum += out.neighborhood[nb.id];
    out.extended[i] = sum;
  }
  return out;
}

std::vector<double> node_influence(const Graph& graph, std::span<const double> encoreness,
                                   double alpha) {
  const std::size_t n = graph.num_nodes();
  std::vector<double> scaled(n, 0.0);
  for (NodeId j = 0; j < n; ++j) {
    if (graph.degree(j) > 0) {
      scaled[j] = encoreness[j] / std::pow(static_cast<double>(graph.degree(j)), alpha);
    }
  }
  std::vector<double> ni(n, 0.0);
  for (NodeId i = 0; i < n; ++i) {
    double sum = encoreness[i];
    for (const Neighbor& nb : graph.neighbors(i)) sum += scaled[nb.id] * nb.weight;
    ni[i] = sum;
  }
  return ni;
}

double alpha_from_ratio(double r) { return 1.0 + std::cbrt(0.3 - r); }

AdaptiveAlpha adaptive_alpha(const Graph& graph, std::span<const std::uint32_t> kshell,
                             std::span<const double> encoreness) {
  const std::size_t n = graph.num_nodes();
  if (n == 0) throw Error("adaptive alpha is undefined on an empty graph");
  std::vector<double> ni = node_influence(graph, encoreness, 1.0);

  // Summed in id order so the threshold does not depend on the ranking.
  double total = 0.0;
  for (double v : ni) total += v;
  if (!(total > 0.0)) return {1.0, 0.3, 0};

  std::vector<NodeId> ranked(n);
  std::iota(ranked.begin(), ranked.end(), 0);
  std::sort(ranked.begin(), ranked.end(), [&](NodeId a, NodeId b) {
    if (kshell[a] != kshell[b]) return kshell[a] > kshell[b];
    if (ni[a] != ni[b]) return ni[a] > ni[b];
    return a < b;
  });

  const double half = total / 2.0;
  double cumulative = 0.0;
  std::size_t count = 0;
  for (NodeId v : ranked) {
    cumulative += ni[v];
    ++count;
    if (cumulative >= half) break;
  }
  AdaptiveAlpha out;
  out.n_prime = count;
  out.r = static_cast<double>(count) / static_cast<double>(n);
  out.alpha = alpha_from_ratio(out.r);
  return out;
}

AdaptiveAlpha adaptive_alpha(const Graph& graph) {
  auto kshell = kshell_decomposition(graph);
  auto coreness = encoreness(graph, kshell);
  return adaptive_alpha(graph, kshell, coreness.extended);
}

InfluenceTable compute_influence(const Graph& graph, std::optional<double> fixed_alpha) {
  InfluenceTable table;
  table.kshell = kshell_decomposition(graph);
  Coreness coreness = encoreness(graph, table.kshell);
  if (graph.num_nodes() > 0) {
    AdaptiveAlpha adaptive = adaptive_alpha(graph, table.kshell, coreness.extended);
    table.alpha = adaptive.alpha;
    table.r = adaptive.r;
    table.n_prime = adaptive.n_prime;
  }
  if (fixed_alpha) table.alpha = *fixed_alpha;
  table.node_influence = node_influence(graph, coreness.extended, table.alpha);
  table.nbr_coreness = std::move(coreness.neighborhood);
  table.encoreness = std::move(coreness.extended);
  return table;
}

}  // namespace linsia

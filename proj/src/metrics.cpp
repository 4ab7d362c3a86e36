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

#include "linsia/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

namespace linsia {

Metric parse_metric(std::string_view name) {
  if (name == "Q") return Metric::kQ;
  if (name == "EQ") return Metric::kEQ;
  if (name == "NMI") return Metric::kNMI;
  if (name == "ENMI") return Metric::kENMI;
  if (name == "C") return Metric::kCommunities;
  throw Error("unknown metric '" + std::string(name) + "' (expected Q, EQ, NMI, ENMI or C)");
}

std::string_view to_string(Metric metric) {
  switch (metric) {
    case Metric::kQ: return "Q";
    case Metric::kEQ: return "EQ";
    case Metric::kNMI: return "NMI";
    case Metric::kENMI: return "ENMI";
    case Metric::kCommunities: return "C";
  }
  return "?";
}

namespace {

double edge_mass(const Graph& graph, bool weighted) {
  double m = weighted ? graph.total_weight() : static_cast<double>(graph.num_edges());
  if (!(m > 0.0)) throw Error("modularity is undefined on a graph without edges");
  return m;
}

double node_strength(const Graph& graph, NodeId node, bool weighted) {
  return weighted ? graph.weighted_degree(node) : static_cast<double>(graph.degree(node));
}

void check_universe(const Graph& graph, std::size_t cover_nodes) {
  if (cover_nodes != graph.num_nodes()) throw Error("cover and graph differ in node count");
}

}  // namespace

double modularity_q(const Graph& graph, const Cover& cover, bool weighted) {
  check_universe(graph, cover.num_nodes());
  if (!cover.is_disjoint()) {
    throw Error("modularity Q needs a disjoint cover; use extended modularity EQ for overlaps");
  }
  const double m = edge_mass(graph, weighted);
  std::vector<double> internal(cover.size(), 0.0);
  std::vector<double> volume(cover.size(), 0.0);
  for (NodeId i = 0; i < graph.num_nodes(); ++i) {
    const std::size_t ci = cover.memberships(i).front();
    volume[ci] += node_strength(graph, i, weighted);
    for (const Neighbor& nb : graph.neighbors(i)) {
      if (i < nb.id && cover.memberships(nb.id).front() == ci) {
        internal[ci] += weighted ? nb.weight : 1.0;
      }
    }
  }
  double q = 0.0;
  for (std::size_t c = 0; c < cover.size(); ++c) {
    const double share = volume[c] / (2.0 * m);
    q += internal[c] / m - share * share;
  }
  return q;
}

double extended_modularity_eq(const Graph& graph, std::span<const Community> communities,
                              bool weighted) {
  if (communities.empty()) throw Error("extended modularity needs a non-empty cover");
  const std::size_t n = graph.num_nodes();
  const double m = edge_mass(graph, weighted);
  std::vector<double> overlap(n, 0.0);
  for (const Community& c : communities) {
    for (NodeId i : c) {
      if (i >= n) throw Error("cover names a node outside the graph");
      overlap[i] += 1.0;
    }
  }

  std::vector<std::size_t> stamp(n, 0);
  double eq = 0.0;
  for (std::size_t c = 0; c < communities.size(); ++c) {
    for (NodeId i : communities[c]) stamp[i] = c + 1;
    double internal = 0.0;
    double volume = 0.0;
    for (NodeId i : communities[c]) {
      volume += node_strength(graph, i, weighted) / overlap[i];
      for (const Neighbor& nb : graph.neighbors(i)) {
        if (stamp[nb.id] == c + 1) {
          internal += (weighted ? nb.weight : 1.0) / (overlap[i] * overlap[nb.id]);
        }
      }
    }
    const double share = volume / (2.0 * m);
    eq += internal / (2.0 * m) - share * share;
  }
  return eq;
}

double extended_modularity_eq(const Graph& graph, const Cover& cover, bool weighted) {
  check_universe(graph, cover.num_nodes());
  return extended_modularity_eq(graph, std::span<const Community>(cover.communities()), weighted);
}

namespace {

double plogp(double p) { return p > 0.0 ? -p * std::log(p) : 0.0; }

double partition_entropy(const Cover& cover) {
  const double n = static_cast<double>(cover.num_nodes());
  double h = 0.0;
  for (const Community& c : cover.communities()) h += plogp(static_cast<double>(c.size()) / n);
  return h;
}

}  // namespace

double nmi(const Cover& a, const Cover& b) {
  if (a.num_nodes() != b.num_nodes()) throw Error("NMI needs covers over the same nodes");
  if (!a.is_disjoint() || !b.is_disjoint()) throw Error("NMI needs disjoint covers; use ENMI");
  if (a.num_nodes() == 0) throw Error("NMI is undefined on an empty node set");

  const double n = static_cast<double>(a.num_nodes());
  std::map<std::pair<std::size_t, std::size_t>, double> joint;
  for (NodeId i = 0; i < a.num_nodes(); ++i) {
    joint[{a.memberships(i).front(), b.memberships(i).front()}] += 1.0;
  }
  const double ha = partition_entropy(a);
  const double hb = partition_entropy(b);
  if (ha + hb == 0.0) return 1.0;

  double mutual = 0.0;
  for (const auto& [cell, count] : joint) {
    const double sa = static_cast<double>(a[cell.first].size());
    const double sb = static_cast<double>(b[cell.second].size());
    mutual += (count / n) * std::log(count * n / (sa * sb));
  }
  return std::clamp(2.0 * mutual / (ha + hb), 0.0, 1.0);
}

namespace {

// Mean over communities of X of H(X_k | Y) / H(X_k).
double normalized_conditional_entropy(const Cover& x, const Cover& y) {
  const double n = static_cast<double>(x.num_nodes());
  std::vector<double> overlap(y.size(), 0.0);
  double sum = 0.0;
  for (const Community& xk : x.communities()) {
    std::fill(overlap.begin(), overlap.end(), 0.0);
    for (NodeId i : xk) {
      for (std::size_t l : y.memberships(i)) overlap[l] += 1.0;
    }
    const double size_x = static_cast<double>(xk.size());
    const double h_x = plogp(size_x / n) + plogp(1.0 - size_x / n);
    if (h_x == 0.0) continue;

    double best = h_x;
    for (std::size_t l = 0; l < y.size(); ++l) {
      const double size_y = static_cast<double>(y[l].size());
      const double p11 = overlap[l] / n;
      const double p10 = (size_x - overlap[l]) / n;
      const double p01 = (size_y - overlap[l]) / n;
      const double p00 = (n - size_x - size_y + overlap[l]) / n;
      if (plogp(p11) + plogp(p00) < plogp(p01) + plogp(p10)) continue;
      const double h_joint = plogp(p11) + plogp(p10) + plogp(p01) + plogp(p00);
      const double h_y = plogp(size_y / n) + plogp(1.0 - size_y / n);
      best = std::min(best, h_joint - h_y);
    }
    sum += std::max(best, 0.0) / h_x;
  }
  return sum / static_cast<double>(x.size());
}

}  // namespace

double enmi(const Cover& a, const Cover& b) {
  if (a.num_nodes() != b.num_nodes()) throw Error("ENMI needs covers over the same nodes");
  if (a.size() == 0 || b.size() == 0) throw Error("ENMI is undefined for empty covers");
  const double value =
      1.0 - 0.5 * (normalized_conditional_entropy(a, b) + normalized_conditional_entropy(b, a));
  return std::clamp(value, 0.0, 1.0);
}

}  // namespace linsia

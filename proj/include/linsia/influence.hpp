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

#ifndef LINSIA_INFLUENCE_HPP_
#define LINSIA_INFLUENCE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "linsia/graph.hpp"

namespace linsia {

// Core number of every node on the unweighted skeleton (bucket peeling, O(n + m)).
std::vector<std::uint32_t> kshell_decomposition(const Graph& graph);

struct Coreness {
  std::vector<double> neighborhood;  // sum of neighbors' k-shell
  std::vector<double> extended;      // sum of neighbors' neighborhood coreness
};

// Extended neighborhood coreness (ENCoreness) in two aggregation stages.
Coreness encoreness(const Graph& graph, std::span<const std::uint32_t> kshell);

// Node influence:
//   NI(i) = enc(i) + sum_{j in N(i)} enc(j) / degree(j)^alpha * w(i, j)
std::vector<double> node_influence(const Graph& graph, std::span<const double> encoreness,
                                   double alpha);

struct AdaptiveAlpha {
  double alpha = 1.0;
  double r = 0.3;
  std::size_t n_prime = 0;
};

// alpha = 1 + cbrt(0.3 - r) with the signed real cube root.
double alpha_from_ratio(double r);

// Accumulates NI (evaluated at alpha = 1) over nodes in descending k-shell
// order until the running sum reaches half the total; r is the fraction of
// nodes consumed. Ties in k-shell fall back to descending NI, then node id.
// A graph with zero total influence yields alpha = 1, r = 0.3.
AdaptiveAlpha adaptive_alpha(const Graph& graph, std::span<const std::uint32_t> kshell,
                             std::span<const double> encoreness);
AdaptiveAlpha adaptive_alpha(const Graph& graph);

struct InfluenceTable {
  std::vector<std::uint32_t> kshell;
  std::vector<double> nbr_coreness;
  std::vector<double> encoreness;
  std::vector<double> node_influence;
  double alpha = 1.0;
  double r = 0.3;
  std::size_t n_prime = 0;
};

// Everything label propagation needs. With `fixed_alpha` the adaptive value is
// still reported in r / n_prime but NI uses the given exponent.
InfluenceTable compute_influence(const Graph& graph,
                                 std::optional<double> fixed_alpha = std::nullopt);

}  // namespace linsia

#endif  // LINSIA_INFLUENCE_HPP_

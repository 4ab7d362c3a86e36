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

#ifndef LINSIA_METRICS_HPP_
#define LINSIA_METRICS_HPP_

#include <span>
#include <string_view>

#include "linsia/cover.hpp"
#include "linsia/graph.hpp"

namespace linsia {

enum class Metric { kQ, kEQ, kNMI, kENMI, kCommunities };

Metric parse_metric(std::string_view name);
std::string_view to_string(Metric metric);

struct MetricValue {
  Metric name = Metric::kQ;
  double value = 0.0;
};

// Newman-Girvan modularity of a disjoint cover. Unweighted skeleton unless
// `weighted`. Throws Error for overlapping covers or edgeless graphs.
double modularity_q(const Graph& graph, const Cover& cover, bool weighted = false);

// Overlap-aware modularity:
//   EQ = 1/2m sum_c sum_{i,j in c} 1/(O_i O_j) [A_ij - k_i k_j / 2m]
// where O_i counts the communities holding i. The span overload accepts any
// community list, duplicates included; O_i then counts repeats.
double extended_modularity_eq(const Graph& graph, std::span<const Community> communities,
                              bool weighted = false);
double extended_modularity_eq(const Graph& graph, const Cover& cover, bool weighted = false);

// 2 I(A;B) / (H(A) + H(B)) for disjoint covers; 1 when both are trivial.
double nmi(const Cover& a, const Cover& b);

// Overlapping NMI from per-community binary membership variables, with the
// best-match conditional entropies averaged over both directions. Matches
// whose joint entropy profile fails h(P11) + h(P00) >= h(P01) + h(P10) are
// discarded. A community with zero entropy (the whole node set) contributes
// a normalized conditional entropy of 0.
double enmi(const Cover& a, const Cover& b);

}  // namespace linsia

#endif  // LINSIA_METRICS_HPP_

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

#ifndef LINSIA_HARNESS_HPP_
#define LINSIA_HARNESS_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "linsia/cover.hpp"
#include "linsia/graph.hpp"
#include "linsia/metrics.hpp"
#include "linsia/propagation.hpp"

namespace linsia {

struct PlantedPartition {
  std::size_t n = 128;
  std::size_t communities = 4;
  double p_in = 0.3;
  double p_out = 0.01;
  std::size_t overlap_nodes = 0;        // O_n
  std::size_t overlap_memberships = 2;  // O_m
  std::uint64_t seed = 0;
};

struct PlantedGraph {
  Graph graph;
  Cover truth;
};

// Blocks of near-equal size (node i sits in block i * communities / n).
// Pairs inside a block connect with p_in, across blocks with p_out; edges are
// drawn by geometric skipping so sparse graphs cost O(n + m). Each of the
// `overlap_nodes` randomly chosen nodes joins overlap_memberships - 1 extra
// blocks, wired to their members at p_in. Fully determined by `seed`.
PlantedGraph planted_partition(const PlantedPartition& params);

// p_out giving mixing ratio mu = p_out / (p_in + p_out).
double p_out_for_mu(double p_in, double mu);

// Classic asynchronous majority label propagation: random sweep order,
// weighted neighbor votes, uniformly random tie-breaks. Stops once every node
// holds a maximal label or after max_sweeps.
Cover baseline_lpa(const Graph& graph, std::uint64_t seed, std::size_t max_sweeps = 100);

enum class Algorithm { kLinsia, kLpa };
Algorithm parse_algorithm(std::string_view name);
std::string_view to_string(Algorithm algorithm);

struct ExperimentSpec {
  std::string name;
  // Either a file source ...
  std::optional<std::filesystem::path> graph_file;
  EdgeListFormat format = EdgeListFormat::kPlain;
  std::optional<std::filesystem::path> truth_file;
  // ... or a generator, optionally swept over mixing ratios.
  std::optional<PlantedPartition> generator;
  std::vector<double> mu_values;

  std::vector<Algorithm> algorithms = {Algorithm::kLinsia};
  Mode mode = Mode::kDisjoint;
  std::vector<Metric> metrics = {Metric::kNMI};
  std::size_t repetitions = 1;
  std::uint64_t seed = 0;
  std::size_t max_sweeps = 100;
};

// JSON spec; relative paths resolve against `base_dir`. Unknown algorithm or
// metric names throw Error here, before anything runs.
ExperimentSpec parse_experiment_spec(const std::string& json_text,
                                     const std::filesystem::path& base_dir = {});
ExperimentSpec load_experiment_spec(const std::filesystem::path& path);

struct ExperimentRow {
  std::string algorithm;
  std::string graph;
  std::string mode;
  std::string metric;
  double value = 0.0;
  std::uint64_t seed = 0;
  double runtime_ms = 0.0;
};

// One row per (mu, algorithm, repetition, metric) in that nesting order, mu
// ascending. Repetition r runs with seed + r; runtime covers detection only.
std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec);

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);

}  // namespace linsia

#endif  // LINSIA_HARNESS_HPP_

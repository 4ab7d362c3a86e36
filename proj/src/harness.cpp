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

#include "linsia/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "linsia/roles.hpp"

namespace linsia {

namespace {

// Portable draws on top of mt19937_64 so generated graphs do not depend on the
// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  // Gap to the next success of a Bernoulli(p) sequence, minus one.
  std::uint64_t skip(double p) {
    if (p >= 1.0) return 0;
    const double u = uniform();
    return static_cast<std::uint64_t>(std::floor(std::log1p(-u) / std::log1p(-p)));
  }

 private:
  std::mt19937_64 engine_;
};

// Visits each index of [0, count) independently with probability p.
template <typename Visit>
void sample_pairs(Rng& rng, std::uint64_t count, double p, Visit visit) {
  if (p <= 0.0 || count == 0) return;
  std::uint64_t k = rng.skip(p);
  while (k < count) {
    visit(k);
    k += rng.skip(p) + 1;
  }
}

}  // namespace

double p_out_for_mu(double p_in, double mu) {
  if (!(mu >= 0.0 && mu < 1.0)) throw Error("mixing ratio must lie in [0, 1)");
  return mu * p_in / (1.0 - mu);
}

PlantedGraph planted_partition(const PlantedPartition& params) {
  const std::size_t n = params.n;
  const std::size_t k = params.communities;
  if (k == 0 || k > n) throw Error("planted partition needs 1 <= communities <= n");
  auto valid = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!valid(params.p_in) || !valid(params.p_out)) {
    throw Error("planted partition probabilities must lie in [0, 1]");
  }
  if (params.overlap_nodes > 0) {
    if (params.overlap_memberships < 2) throw Error("overlap memberships must be >= 2");
    if (params.overlap_memberships > k) throw Error("overlap memberships exceed block count");
    if (params.overlap_nodes > n) throw Error("more overlapping nodes than nodes");
  }

  std::vector<std::size_t> block_start(k + 1);
  for (std::size_t b = 0; b <= k; ++b) block_start[b] = (b * n + k - 1) / k;
  auto block_of = [&](std::size_t v) { return v * k / n; };

  Rng rng(params.seed);
  std::vector<Edge> edges;
  for (std::size_t b = 0; b < k; ++b) {
    const std::uint64_t size = block_start[b + 1] - block_start[b];
    // Pair index t enumerates (i, j), i < j, row by row.
    std::uint64_t row = 0;
    std::uint64_t row_begin = 0;
    sample_pairs(rng, size * (size - 1) / 2, params.p_in, [&](std::uint64_t t) {
      while (t >= row_begin + (size - 1 - row)) {
        row_begin += size - 1 - row;
        ++row;
      }
      const std::uint64_t col = row + 1 + (t - row_begin);
      edges.push_back({static_cast<NodeId>(block_start[b] + row),
                       static_cast<NodeId>(block_start[b] + col), 1.0});
    });
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const std::uint64_t size_a = block_start[a + 1] - block_start[a];
      const std::uint64_t size_b = block_start[b + 1] - block_start[b];
      sample_pairs(rng, size_a * size_b, params.p_out, [&](std::uint64_t t) {
        edges.push_back({static_cast<NodeId>(block_start[a] + t / size_b),
                         static_cast<NodeId>(block_start[b] + t % size_b), 1.0});
      });
    }
  }

  std::vector<Community> truth(k);
  for (std::size_t v = 0; v < n; ++v) truth[block_of(v)].push_back(static_cast<NodeId>(v));

  if (params.overlap_nodes > 0) {
    std::vector<NodeId> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (std::size_t i = 0; i < params.overlap_nodes; ++i) {
      std::swap(pool[i], pool[i + rng.below(n - i)]);
    }
    for (std::size_t i = 0; i < params.overlap_nodes; ++i) {
      const NodeId v = pool[i];
      std::vector<std::size_t> others;
      for (std::size_t b = 0; b < k; ++b) {
        if (b != block_of(v)) others.push_back(b);
      }
      for (std::size_t e = 0; e + 1 < params.overlap_memberships; ++e) {
        std::swap(others[e], others[e + rng.below(others.size() - e)]);
        const std::size_t b = others[e];
        truth[b].push_back(v);
        for (std::size_t u = block_start[b]; u < block_start[b + 1]; ++u) {
          if (rng.uniform() < params.p_in) edges.push_back({v, static_cast<NodeId>(u), 1.0});
        }
      }
    }
  }

  // Extra wiring may repeat a cross-block edge; keep the graph unweighted.
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& x, const Edge& y) { return std::pair(x.u, x.v) < std::pair(y.u, y.v); });
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](const Edge& x, const Edge& y) { return x.u == y.u && x.v == y.v; }),
              edges.end());

  PlantedGraph out{Graph::from_edges(n, edges), {}};
  out.truth = Cover(n, std::move(truth));
  return out;
}

Cover baseline_lpa(const Graph& graph, std::uint64_t seed, std::size_t max_sweeps) {
  const std::size_t n = graph.num_nodes();
  Rng rng(seed);
  std::vector<std::size_t> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> votes(n, 0.0);
  std::vector<std::size_t> touched;
  std::vector<std::size_t> leaders;

  // Fills `leaders` with the best-supported labels around `v`.
  auto tally = [&](NodeId v) {
    touched.clear();
    for (const Neighbor& nb : graph.neighbors(v)) {
      const std::size_t l = label[nb.id];
      if (votes[l] == 0.0) touched.push_back(l);
      votes[l] += nb.weight;
    }
    double best = 0.0;
    for (std::size_t l : touched) best = std::max(best, votes[l]);
    leaders.clear();
    for (std::size_t l : touched) {
      if (votes[l] == best) leaders.push_back(l);
    }
    std::sort(leaders.begin(), leaders.end());
    for (std::size_t l : touched) votes[l] = 0.0;
  };

  for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    for (NodeId v : order) {
      if (graph.degree(v) == 0) continue;
      tally(v);
      label[v] = leaders[rng.below(leaders.size())];
    }
    bool stable = true;
    for (NodeId v = 0; v < n && stable; ++v) {
      if (graph.degree(v) == 0) continue;
      tally(v);
      stable = std::binary_search(leaders.begin(), leaders.end(), label[v]);
    }
    if (stable) break;
  }
  return Cover::from_assignment(label);
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "linsia") return Algorithm::kLinsia;
  if (name == "lpa") return Algorithm::kLpa;
  throw Error("unknown algorithm '" + std::string(name) + "' (expected linsia or lpa)");
}

std::string_view to_string(Algorithm algorithm) {
  return algorithm == Algorithm::kLinsia ? "linsia" : "lpa";
}

ExperimentSpec parse_experiment_spec(const std::string& json_text,
                                     const std::filesystem::path& base_dir) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(std::string("experiment spec is not valid JSON: ") + e.what());
  }
  try {
    ExperimentSpec spec;
    spec.name = doc.value("name", std::string("experiment"));
    const json& g = doc.at("graph");
    auto resolve = [&](const std::string& p) {
      std::filesystem::path path(p);
      return path.is_relative() ? base_dir / path : path;
    };
    if (g.contains("file")) {
      spec.graph_file = resolve(g.at("file").get<std::string>());
      const std::string format = g.value("format", std::string("plain"));
      if (format == "plain") {
        spec.format = EdgeListFormat::kPlain;
      } else if (format == "lfr") {
        spec.format = EdgeListFormat::kLfr;
      } else {
        throw Error("unknown graph format '" + format + "'");
      }
      if (g.contains("truth")) spec.truth_file = resolve(g.at("truth").get<std::string>());
    } else if (g.contains("planted")) {
      const json& p = g.at("planted");
      PlantedPartition params;
      params.n = p.value("n", params.n);
      params.communities = p.value("communities", params.communities);
      params.p_in = p.value("p_in", params.p_in);
      params.p_out = p.value("p_out", params.p_out);
      params.overlap_nodes = p.value("overlap_nodes", params.overlap_nodes);
      params.overlap_memberships = p.value("overlap_memberships", params.overlap_memberships);
      params.seed = p.value("seed", params.seed);
      spec.generator = params;
      if (g.contains("mu")) spec.mu_values = g.at("mu").get<std::vector<double>>();
    } else {
      throw Error("experiment graph needs either 'file' or 'planted'");
    }

    spec.algorithms.clear();
    if (doc.contains("algorithm")) {
      spec.algorithms.push_back(parse_algorithm(doc.at("algorithm").get<std::string>()));
    }
    if (doc.contains("algorithms")) {
      for (const auto& a : doc.at("algorithms")) spec.algorithms.push_back(parse_algorithm(a.get<std::string>()));
    }
    if (spec.algorithms.empty()) spec.algorithms.push_back(Algorithm::kLinsia);
    spec.mode = parse_mode(doc.value("mode", std::string("disjoint")));
    if (doc.contains("metrics")) {
      spec.metrics.clear();
      for (const auto& m : doc.at("metrics")) spec.metrics.push_back(parse_metric(m.get<std::string>()));
    }
    spec.repetitions = doc.value("repetitions", std::size_t{1});
    spec.seed = doc.value("seed", std::uint64_t{0});
    spec.max_sweeps = doc.value("max_sweeps", std::size_t{100});
    return spec;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed experiment spec: ") + e.what());
  }
}

ExperimentSpec load_experiment_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_experiment_spec(buffer.str(), path.parent_path());
}

namespace {

struct Instance {
  std::string name;
  Graph graph;
  std::optional<Cover> truth;
};

std::string format_mu(double mu) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", mu);
  return buf;
}

void validate(const ExperimentSpec& spec, bool has_truth, bool truth_disjoint) {
  if (spec.repetitions == 0) throw Error("repetitions must be >= 1");
  for (Metric m : spec.metrics) {
    if ((m == Metric::kNMI || m == Metric::kENMI) && !has_truth) {
      throw Error(std::string(to_string(m)) + " needs a ground-truth cover");
    }
    if (m == Metric::kNMI && !truth_disjoint) {
      throw Error("NMI needs a disjoint ground truth; use ENMI");
    }
    const bool overlapping_linsia =
        spec.mode == Mode::kOverlapping &&
        std::find(spec.algorithms.begin(), spec.algorithms.end(), Algorithm::kLinsia) !=
            spec.algorithms.end();
    if ((m == Metric::kQ || m == Metric::kNMI) && overlapping_linsia) {
      throw Error(std::string(to_string(m)) + " needs disjoint covers; use " +
                  (m == Metric::kQ ? "EQ" : "ENMI") + " in overlapping mode");
    }
  }
}

double evaluate(Metric metric, const Graph& graph, const Cover& cover,
                const std::optional<Cover>& truth) {
  switch (metric) {
    case Metric::kQ: return modularity_q(graph, cover);
    case Metric::kEQ: return extended_modularity_eq(graph, cover);
    case Metric::kNMI: return nmi(cover, *truth);
    case Metric::kENMI: return enmi(cover, *truth);
    case Metric::kCommunities: return static_cast<double>(cover.size());
  }
  return 0.0;
}

}  // namespace

std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec) {
  std::vector<Instance> instances;
  if (spec.graph_file) {
    Instance inst;
    inst.name = spec.graph_file->stem().string();
    inst.graph = load_edge_list_file(*spec.graph_file, spec.format);
    if (spec.truth_file) inst.truth = load_community_file(*spec.truth_file, inst.graph);
    validate(spec, inst.truth.has_value(), !inst.truth || inst.truth->is_disjoint());
    instances.push_back(std::move(inst));
  } else if (spec.generator) {
    validate(spec, true, spec.generator->overlap_nodes == 0);
    std::vector<double> mus = spec.mu_values;
    std::sort(mus.begin(), mus.end());
    if (mus.empty()) {
      PlantedGraph pg = planted_partition(*spec.generator);
      instances.push_back({spec.name, std::move(pg.graph), std::move(pg.truth)});
    }
    for (double mu : mus) {
      PlantedPartition params = *spec.generator;
      params.p_out = p_out_for_mu(params.p_in, mu);
      PlantedGraph pg = planted_partition(params);
      instances.push_back(
          {spec.name + "(mu=" + format_mu(mu) + ")", std::move(pg.graph), std::move(pg.truth)});
    }
  } else {
    throw Error("experiment has no graph source");
  }

  std::vector<ExperimentRow> rows;
  for (const Instance& inst : instances) {
    for (Algorithm algorithm : spec.algorithms) {
      for (std::size_t rep = 0; rep < spec.repetitions; ++rep) {
        const std::uint64_t seed = spec.seed + rep;
        const auto start = std::chrono::steady_clock::now();
        Cover cover;
        Mode mode = Mode::kDisjoint;
        if (algorithm == Algorithm::kLinsia) {
          AnalysisOptions options;
          options.hierarchy.propagation.mode = spec.mode;
          options.hierarchy.propagation.max_sweeps = spec.max_sweeps;
          mode = spec.mode;
          cover = analyze(inst.graph, options).best_cover;
        } else {
          cover = baseline_lpa(inst.graph, seed, spec.max_sweeps);
        }
        const double elapsed = std::chrono::duration<double, std::milli>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
        for (Metric metric : spec.metrics) {
          rows.push_back({std::string(to_string(algorithm)), inst.name,
                          std::string(to_string(mode)), std::string(to_string(metric)),
                          evaluate(metric, inst.graph, cover, inst.truth), seed, elapsed});
        }
      }
    }
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << "algorithm,graph,mode,metric,value,seed,runtime_ms\n";
  char value[64];
  char runtime[64];
  for (const ExperimentRow& r : rows) {
    std::snprintf(value, sizeof(value), "%.10g", r.value);
    std::snprintf(runtime, sizeof(runtime), "%.3f", r.runtime_ms);
    out << r.algorithm << ',' << r.graph << ',' << r.mode << ',' << r.metric << ',' << value
        << ',' << r.seed << ',' << runtime << '\n';
  }
}

}  // namespace linsia

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

// linsia: command-line front end for influence-ordered label propagation.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "linsia/cover.hpp"
#include "linsia/export.hpp"
#include "linsia/graph.hpp"
#include "linsia/harness.hpp"
#include "linsia/hierarchy.hpp"
#include "linsia/influence.hpp"
#include "linsia/metrics.hpp"
#include "linsia/propagation.hpp"
#include "linsia/roles.hpp"

namespace {

using nlohmann::json;

struct GraphArgs {
  std::string path;
  std::string format = "plain";

  void attach(CLI::App* cmd) {
    cmd->add_option("graph", path, "Edge list file")->required();
    cmd->add_option("--input-format", format, "Edge list flavour")
        ->check(CLI::IsMember({"plain", "lfr"}));
  }

  linsia::Graph load() const {
    return linsia::load_edge_list_file(
        path, format == "lfr" ? linsia::EdgeListFormat::kLfr : linsia::EdgeListFormat::kPlain);
  }
};

struct PropagationArgs {
  std::string mode = "disjoint";
  double init_influence = 1.0;
  std::size_t max_sweeps = 100;
  double overlap_threshold = linsia::kDefaultOverlapRatio;

  void attach(CLI::App* cmd) {
    cmd->add_option("--mode", mode, "disjoint or overlapping")
        ->check(CLI::IsMember({"disjoint", "overlapping"}));
    cmd->add_option("--init-influence", init_influence, "Initial label influence (> 0)");
    cmd->add_option("--max-sweeps", max_sweeps, "Sweep cap per propagation");
    cmd->add_option("--overlap-threshold", overlap_threshold,
                    "Fraction of the strongest label a second label must exceed");
  }

  linsia::PropagationOptions options() const {
    linsia::PropagationOptions o;
    o.mode = linsia::parse_mode(mode);
    o.initial_influence = init_influence;
    o.max_sweeps = max_sweeps;
    o.overlap_ratio = overlap_threshold;
    return o;
  }
};

void print(const json& doc) { std::cout << doc.dump(2) << '\n'; }

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw linsia::Error("cannot write " + path.string());
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hierarchical and overlapping community, hub and outlier detection"};
  app.require_subcommand(1);

  // influence
  GraphArgs influence_graph;
  auto* influence_cmd = app.add_subcommand("influence", "k-shell, ENCoreness and node influence");
  influence_graph.attach(influence_cmd);

  // detect
  GraphArgs detect_graph;
  PropagationArgs detect_prop;
  auto* detect_cmd = app.add_subcommand("detect", "Single-level label propagation");
  detect_graph.attach(detect_cmd);
  detect_prop.attach(detect_cmd);

  // hierarchy
  GraphArgs hier_graph;
  PropagationArgs hier_prop;
  std::string hier_seed;
  std::string emit_levels;
  bool freeze_alpha = false;
  bool hier_weighted = false;
  auto* hier_cmd = app.add_subcommand("hierarchy", "Bottom-up super-network hierarchy");
  hier_graph.attach(hier_cmd);
  hier_prop.attach(hier_cmd);
  hier_cmd->add_option("--seed-cover", hier_seed, "Known communities to start from");
  hier_cmd->add_option("--emit-levels", emit_levels, "Directory for one cover file per level");
  hier_cmd->add_flag("--freeze-alpha", freeze_alpha, "Reuse the primitive alpha on every level");
  hier_cmd->add_flag("--weighted-modularity", hier_weighted, "Score levels with edge weights");

  // roles
  GraphArgs roles_graph;
  PropagationArgs roles_prop;
  std::string roles_seed;
  std::string hub_rule = "text";
  bool roles_freeze = false;
  bool roles_weighted = false;
  std::string export_format;
  std::string export_out;
  auto* roles_cmd = app.add_subcommand("roles", "Full report: divisions, hubs, outliers");
  roles_graph.attach(roles_cmd);
  roles_prop.attach(roles_cmd);
  roles_cmd->add_option("--seed-cover", roles_seed, "Known communities to start from");
  roles_cmd->add_option("--hub-rule", hub_rule, "text (>= 2 labels) or formula (>= 1 label)")
      ->check(CLI::IsMember({"text", "formula"}));
  roles_cmd->add_flag("--freeze-alpha", roles_freeze, "Reuse the primitive alpha on every level");
  roles_cmd->add_flag("--weighted-modularity", roles_weighted, "Score levels with edge weights");
  roles_cmd->add_option("--export", export_format, "Also write an annotated graph")
      ->check(CLI::IsMember({"graphml", "dot"}));
  roles_cmd->add_option("--out", export_out, "Destination of --export (default stdout)");

  // metrics
  GraphArgs metrics_graph;
  std::string cover_path;
  std::string truth_path;
  bool metrics_weighted = false;
  auto* metrics_cmd = app.add_subcommand("metrics", "Evaluate a cover");
  metrics_graph.attach(metrics_cmd);
  metrics_cmd->add_option("--cover", cover_path, "Cover to evaluate")->required();
  metrics_cmd->add_option("--truth", truth_path, "Ground-truth cover for NMI / ENMI");
  metrics_cmd->add_flag("--weighted-modularity", metrics_weighted, "Use edge weights in Q / EQ");

  // compare
  std::string spec_path;
  std::string csv_path;
  auto* compare_cmd = app.add_subcommand("compare", "Run an experiment spec, write CSV rows");
  compare_cmd->add_option("--spec", spec_path, "Experiment spec (JSON)")->required();
  compare_cmd->add_option("--out", csv_path, "CSV destination (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*influence_cmd) {
      const linsia::Graph g = influence_graph.load();
      const linsia::InfluenceTable table = linsia::compute_influence(g);
      std::cout << json{{"alpha", table.alpha}, {"r", table.r}, {"n_prime", table.n_prime}}.dump()
                << '\n';
      std::cout << "node\tkshell\tencoreness\tNI\n";
      for (linsia::NodeId i = 0; i < g.num_nodes(); ++i) {
        std::printf("%s\t%u\t%.17g\t%.17g\n", g.alias(i).c_str(), table.kshell[i],
                    table.encoreness[i], table.node_influence[i]);
      }
    } else if (*detect_cmd) {
      const linsia::Graph g = detect_graph.load();
      const linsia::InfluenceTable table = linsia::compute_influence(g);
      const linsia::LabelState state = linsia::propagate(g, table, detect_prop.options());
      print(linsia::detect_json(g, table, state));
    } else if (*hier_cmd) {
      const linsia::Graph g = hier_graph.load();
      linsia::HierarchyOptions options;
      options.propagation = hier_prop.options();
      options.freeze_alpha = freeze_alpha;
      std::optional<linsia::Cover> seed;
      if (!hier_seed.empty()) seed = linsia::load_community_file(hier_seed, g);
      const linsia::Hierarchy h = linsia::detect_hierarchy(g, options, seed);
      const linsia::Division d =
          linsia::best_division(h, g, options.propagation.mode, hier_weighted);
      if (!emit_levels.empty()) {
        std::filesystem::create_directories(emit_levels);
        for (std::size_t t = 0; t < h.levels.size(); ++t) {
          write_file(std::filesystem::path(emit_levels) / ("level_" + std::to_string(t) + ".txt"),
                     linsia::write_community_file(h.levels[t].cover, g));
        }
      }
      print(linsia::hierarchy_json(g, h, d));
    } else if (*roles_cmd) {
      const linsia::Graph g = roles_graph.load();
      linsia::AnalysisOptions options;
      options.hierarchy.propagation = roles_prop.options();
      options.hierarchy.freeze_alpha = roles_freeze;
      options.hub_rule = linsia::parse_hub_rule(hub_rule);
      options.weighted_modularity = roles_weighted;
      std::optional<linsia::Cover> seed;
      if (!roles_seed.empty()) seed = linsia::load_community_file(roles_seed, g);
      const linsia::StructureReport report = linsia::analyze(g, options, seed);
      if (!export_format.empty()) {
        const std::string text = linsia::export_annotated(
            g, report, linsia::parse_export_format(export_format));
        if (export_out.empty()) {
          std::cout << text;
          return 0;
        }
        write_file(export_out, text);
      }
      print(linsia::report_json(g, report));
    } else if (*metrics_cmd) {
      const linsia::Graph g = metrics_graph.load();
      const linsia::Cover cover = linsia::load_community_file(cover_path, g);
      json out;
      out["communities"] = cover.size();
      if (cover.is_disjoint()) out["Q"] = linsia::modularity_q(g, cover, metrics_weighted);
      out["EQ"] = linsia::extended_modularity_eq(g, cover, metrics_weighted);
      if (!truth_path.empty()) {
        const linsia::Cover truth = linsia::load_community_file(truth_path, g);
        if (cover.is_disjoint() && truth.is_disjoint()) out["NMI"] = linsia::nmi(cover, truth);
        out["ENMI"] = linsia::enmi(cover, truth);
      }
      print(out);
    } else if (*compare_cmd) {
      const linsia::ExperimentSpec spec = linsia::load_experiment_spec(spec_path);
      const auto rows = linsia::run_experiment(spec);
      if (csv_path.empty()) {
        linsia::write_csv(std::cout, rows);
      } else {
        std::ofstream out(csv_path);
        if (!out) throw linsia::Error("cannot write " + csv_path);
        linsia::write_csv(out, rows);
      }
    }
  } catch (const linsia::Error& e) {
    std::cerr << "linsia: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

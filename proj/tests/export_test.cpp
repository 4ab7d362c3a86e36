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

#include <sstream>

#include <doctest.h>

#include "linsia/export.hpp"
#include "oracles.hpp"

using namespace linsia;

namespace {

Graph named_barbell() {
  std::string text;
  const char* left[] = {"a", "b", "c", "d", "e"};
  const char* right[] = {"p", "q", "r", "s", "t"};
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      text += std::string(left[i]) + " " + left[j] + "\n";
      text += std::string(right[i]) + " " + right[j] + "\n";
    }
  }
  text += "x&y d\nx&y e\nx&y p\nx&y q\n";
  std::istringstream in(text);
  return load_edge_list(in);
}

StructureReport overlapping_report(const Graph& g) {
  AnalysisOptions o;
  o.hierarchy.propagation.mode = Mode::kOverlapping;
  return analyze(g, o);
}

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("export format names") {
  CHECK(parse_export_format("graphml") == ExportFormat::kGraphml);
  CHECK(parse_export_format("dot") == ExportFormat::kDot);
  CHECK_THROWS_AS(parse_export_format("gexf"), Error);
}

TEST_CASE("graphml carries roles, labels and intensities") {
  Graph g = named_barbell();
  StructureReport r = overlapping_report(g);
  REQUIRE(r.hubs.size() == 1);
  const std::string xml = export_annotated(g, r, ExportFormat::kGraphml);
  CHECK(count(xml, "<node id=") == g.num_nodes());
  CHECK(count(xml, "<edge source=") == g.num_edges());
  CHECK(count(xml, "<data key=\"role\">hub</data>") == 1);
  CHECK(count(xml, "<data key=\"role\">") == g.num_nodes());
  CHECK(xml.find("<node id=\"x&amp;y\">") != std::string::npos);
  CHECK(xml.find("<data key=\"labels\">[c0,c1]</data>") != std::string::npos);
  CHECK(xml.find("attr.name=\"intensity_c0\"") != std::string::npos);
  CHECK(xml.find("attr.name=\"intensity_c1\"") != std::string::npos);
}

TEST_CASE("dot output quotes every value") {
  Graph g = named_barbell();
  StructureReport r = overlapping_report(g);
  const std::string dot = export_annotated(g, r, ExportFormat::kDot);
  CHECK(dot.rfind("graph G {\n", 0) == 0);
  CHECK(count(dot, " -- ") == g.num_edges());
  CHECK(count(dot, "role=\"hub\"") == 1);
  CHECK(dot.find("\"x&y\" [labels=\"[c0,c1]\", role=\"hub\"") != std::string::npos);
}

TEST_CASE("export rejects a report for another graph") {
  Graph g = named_barbell();
  StructureReport r = overlapping_report(g);
  Graph other = oracle::make_graph(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(export_annotated(other, r, ExportFormat::kDot), Error);
}

TEST_CASE("json documents are reproducible") {
  Graph g = named_barbell();
  const std::string a = report_json(g, overlapping_report(g)).dump(2);
  const std::string b = report_json(g, overlapping_report(g)).dump(2);
  CHECK(a == b);
  auto doc = nlohmann::json::parse(a);
  CHECK(doc["hubs"] == nlohmann::json::array({"x&y"}));
  CHECK(doc.contains("hub_intensity"));
  CHECK(doc["metrics"].contains("EQ"));
}

TEST_CASE("hub intensity display shape") {
  Graph g = named_barbell();
  StructureReport r = overlapping_report(g);
  const std::string shown = hub_intensity_display(g, r);
  CHECK(shown.rfind("{x&y: [(", 0) == 0);
  CHECK(shown.find(", 0.500), (") != std::string::npos);
  CHECK(shown.back() == '}');
}

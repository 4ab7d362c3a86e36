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

#ifndef LINSIA_EXPORT_HPP_
#define LINSIA_EXPORT_HPP_

#include <string>
#include <string_view>

#include <json.hpp>

#include "linsia/graph.hpp"
#include "linsia/hierarchy.hpp"
#include "linsia/influence.hpp"
#include "linsia/propagation.hpp"
#include "linsia/roles.hpp"

namespace linsia {

enum class ExportFormat { kGraphml, kDot };
ExportFormat parse_export_format(std::string_view name);

// Graph with per-node attributes `labels` (best-level communities, named
// c<index>), `role` (member, hub or outlier) and `intensity_c<index>`.
std::string export_annotated(const Graph& graph, const StructureReport& report,
                             ExportFormat format);

// JSON documents printed by the command-line tool. Keys are sorted and no
// timing data is included, so equal inputs give byte-identical output.
nlohmann::json influence_json(const Graph& graph, const InfluenceTable& table);
nlohmann::json detect_json(const Graph& graph, const InfluenceTable& table,
                           const LabelState& state);
nlohmann::json hierarchy_json(const Graph& graph, const Hierarchy& hierarchy,
                              const Division& division);
nlohmann::json report_json(const Graph& graph, const StructureReport& report);

// Communities as lists of node names.
nlohmann::json cover_json(const Graph& graph, const Cover& cover);

// `{node: [(label, intensity), ...], ...}` over the hubs of `report`.
std::string hub_intensity_display(const Graph& graph, const StructureReport& report);

}  // namespace linsia

#endif  // LINSIA_EXPORT_HPP_

// Copyright 2026 The irac Authors.
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

// Graph snapshot file:
//
//   {"nodes": [{"label", "key", "properties"}],
//    "edges": [{"type", "src": {"label", "key"}, "dst": {"label", "key"},
//               "properties"}]}
//
// Nodes are sorted by (label, key), edges by (type, src, dst) and object
// keys alphabetically, so two graphs with the same content produce
// byte-identical files regardless of insertion order.

#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "irac/graph.hpp"

namespace irac {

nlohmann::json to_snapshot(const LegalGraph& graph);
std::string snapshot_text(const LegalGraph& graph);

/// Merges the snapshot's contents into `graph`. Throws SchemaViolation on
/// an unknown label/type or a malformed entry.
void merge_snapshot(LegalGraph& graph, const nlohmann::json& snapshot);
LegalGraph graph_from_snapshot(const nlohmann::json& snapshot);

void save_snapshot(const LegalGraph& graph, const std::filesystem::path& path);
LegalGraph load_snapshot(const std::filesystem::path& path);

nlohmann::json property_to_json(const PropertyValue& value);
/// Throws SchemaViolation for nulls, floats, objects and mixed arrays.
PropertyValue property_from_json(const nlohmann::json& value);

}  // namespace irac

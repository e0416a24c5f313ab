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

#include "irac/snapshot.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

#include "irac/errors.hpp"

namespace irac {

using nlohmann::json;

json property_to_json(const PropertyValue& value) {
  return std::visit([](const auto& v) { return json(v); }, value);
}

PropertyValue property_from_json(const json& value) {
  if (value.is_boolean()) return value.get<bool>();
  if (value.is_number_integer()) return value.get<std::int64_t>();
  if (value.is_string()) return value.get<std::string>();
  if (value.is_array()) {
    std::vector<std::string> items;
    for (const auto& item : value) {
      if (!item.is_string()) {
        throw SchemaViolation("list properties must contain only text");
      }
      items.push_back(item.get<std::string>());
    }
    return items;
  }
  throw SchemaViolation("unsupported property value: " + value.dump());
}

namespace {

json properties_to_json(const PropertyMap& properties) {
  json out = json::object();
  for (const auto& [name, value] : properties) out[name] = property_to_json(value);
  return out;
}

PropertyMap properties_from_json(const json& j) {
  PropertyMap out;
  if (j.is_null()) return out;
  if (!j.is_object()) throw SchemaViolation("properties must be an object");
  for (const auto& [name, value] : j.items()) {
    out.emplace(name, property_from_json(value));
  }
  return out;
}

json ref_to_json(const Node& node) {
  return json{{"label", to_string(node.label)}, {"key", node.key}};
}

NodeRef ref_from_json(const json& j) {
  auto label = parse_node_label(j.at("label").get<std::string>());
  if (!label) {
    throw SchemaViolation("unknown node label: " + j.at("label").dump());
  }
  return {*label, j.at("key").get<std::string>()};
}

}  // namespace

json to_snapshot(const LegalGraph& graph) {
  std::vector<const Node*> nodes;
  for (const Node& n : graph.nodes()) nodes.push_back(&n);
  std::sort(nodes.begin(), nodes.end(), [](const Node* a, const Node* b) {
    return std::tie(a->label, a->key) < std::tie(b->label, b->key);
  });

  std::vector<const Edge*> edges;
  for (const Edge& e : graph.edges()) edges.push_back(&e);
  std::sort(edges.begin(), edges.end(), [&](const Edge* a, const Edge* b) {
    const Node& as = graph.node(a->src);
    const Node& ad = graph.node(a->dst);
    const Node& bs = graph.node(b->src);
    const Node& bd = graph.node(b->dst);
    return std::tie(a->type, as.label, as.key, ad.label, ad.key) <
           std::tie(b->type, bs.label, bs.key, bd.label, bd.key);
  });

  json out;
  out["nodes"] = json::array();
  for (const Node* n : nodes) {
    out["nodes"].push_back({{"label", to_string(n->label)},
                            {"key", n->key},
                            {"properties", properties_to_json(n->properties)}});
  }
  out["edges"] = json::array();
  for (const Edge* e : edges) {
    out["edges"].push_back({{"type", to_string(e->type)},
                            {"src", ref_to_json(graph.node(e->src))},
                            {"dst", ref_to_json(graph.node(e->dst))},
                            {"properties", properties_to_json(e->properties)}});
  }
  return out;
}

std::string snapshot_text(const LegalGraph& graph) {
  return to_snapshot(graph).dump(2) + "\n";
}

void merge_snapshot(LegalGraph& graph, const json& snapshot) {
  try {
    for (const auto& n : snapshot.at("nodes")) {
      NodeRef ref = ref_from_json(n);
      graph.merge_node(ref.label, ref.key,
                       properties_from_json(n.value("properties", json())));
    }
    for (const auto& e : snapshot.at("edges")) {
      auto type = parse_edge_type(e.at("type").get<std::string>());
      if (!type) throw SchemaViolation("unknown edge type: " + e.at("type").dump());
      graph.merge_edge(*type, ref_from_json(e.at("src")),
                       ref_from_json(e.at("dst")),
                       properties_from_json(e.value("properties", json())));
    }
  } catch (const json::exception& ex) {
    throw SchemaViolation(std::string("malformed snapshot: ") + ex.what());
  }
}

LegalGraph graph_from_snapshot(const json& snapshot) {
  LegalGraph graph;
  merge_snapshot(graph, snapshot);
  return graph;
}

void save_snapshot(const LegalGraph& graph, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open snapshot for writing: " + path.string());
  out << snapshot_text(graph);
}

LegalGraph load_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open snapshot: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw SchemaViolation("snapshot " + path.string() + ": " + ex.what());
  }
  return graph_from_snapshot(j);
}

}  // namespace irac

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

#include "irac/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <stdexcept>

#include "irac/errors.hpp"

namespace irac {
namespace {

enum class Kind { kText, kInteger, kBoolean, kTextList };

struct PropertyRule {
  std::string_view name;
  Kind kind;
};

std::span<const PropertyRule> node_rules(NodeLabel label) {
  static constexpr PropertyRule kCase[] = {
      {"citation", Kind::kText},   {"name", Kind::kText},
      {"court", Kind::kText},      {"year", Kind::kInteger},
      {"bench_size", Kind::kInteger}, {"bench_type", Kind::kText},
      {"matter_type", Kind::kText}, {"summary", Kind::kText},
      {"stub", Kind::kBoolean},
  };
  static constexpr PropertyRule kJudge[] = {{"name", Kind::kText},
                                            {"tenure", Kind::kText}};
  static constexpr PropertyRule kStatute[] = {{"name", Kind::kText},
                                              {"title", Kind::kText},
                                              {"repealed", Kind::kBoolean}};
  static constexpr PropertyRule kSection[] = {
      {"number", Kind::kText},
      {"statute_name", Kind::kText},
      {"repealed", Kind::kBoolean},
      {"amended_by", Kind::kTextList},
  };
  static constexpr PropertyRule kIssue[] = {{"text", Kind::kText},
                                            {"category", Kind::kText},
                                            {"case_citation", Kind::kText}};
  static constexpr PropertyRule kRule[] = {{"text", Kind::kText},
                                           {"case_citation", Kind::kText}};
  static constexpr PropertyRule kArgument[] = {{"text", Kind::kText},
                                               {"party", Kind::kText},
                                               {"case_citation", Kind::kText}};
  static constexpr PropertyRule kEvent[] = {
      {"event_type", Kind::kText}, {"court_level", Kind::kText},
      {"sequence", Kind::kInteger}, {"date", Kind::kText},
      {"case_citation", Kind::kText},
  };
  static constexpr PropertyRule kOutcome[] = {{"outcome_type", Kind::kText},
                                              {"text", Kind::kText},
                                              {"case_citation", Kind::kText}};
  static constexpr PropertyRule kJurisdiction[] = {{"court", Kind::kText},
                                                   {"territory", Kind::kText}};
  switch (label) {
    case NodeLabel::kCase: return kCase;
    case NodeLabel::kJudge: return kJudge;
    case NodeLabel::kStatute: return kStatute;
    case NodeLabel::kSection: return kSection;
    case NodeLabel::kLegalIssue: return kIssue;
    case NodeLabel::kRule: return kRule;
    case NodeLabel::kArgument: return kArgument;
    case NodeLabel::kProceduralEvent: return kEvent;
    case NodeLabel::kOutcome: return kOutcome;
    case NodeLabel::kJurisdiction: return kJurisdiction;
  }
  return {};
}

std::span<const PropertyRule> edge_rules(EdgeType type) {
  static constexpr PropertyRule kCites[] = {{"proposition", Kind::kText}};
  static constexpr PropertyRule kOverrules[] = {{"year", Kind::kInteger}};
  static constexpr PropertyRule kBasis[] = {{"basis", Kind::kText}};
  static constexpr PropertyRule kConflicts[] = {
      {"conflict_type", Kind::kText}, {"unresolved", Kind::kBoolean}};
  static constexpr PropertyRule kResolved[] = {
      {"resolution_type", Kind::kText}};
  static constexpr PropertyRule kTriggers[] = {{"condition", Kind::kText}};
  static constexpr PropertyRule kPrecedes[] = {
      {"time_gap_days", Kind::kInteger}};
  switch (type) {
    case EdgeType::kCites: return kCites;
    case EdgeType::kOverrules: return kOverrules;
    case EdgeType::kDistinguishes:
    case EdgeType::kNarrowedBy: return kBasis;
    case EdgeType::kConflictsWith: return kConflicts;
    case EdgeType::kResolvedBy: return kResolved;
    case EdgeType::kTriggers: return kTriggers;
    case EdgeType::kPrecedes: return kPrecedes;
    default: return {};
  }
}

bool has_kind(const PropertyValue& value, Kind kind) {
  switch (kind) {
    case Kind::kText: return std::holds_alternative<std::string>(value);
    case Kind::kInteger: return std::holds_alternative<std::int64_t>(value);
    case Kind::kBoolean: return std::holds_alternative<bool>(value);
    case Kind::kTextList:
      return std::holds_alternative<std::vector<std::string>>(value);
  }
  return false;
}

template <typename Owner>
void check_properties(const PropertyMap& properties,
                      std::span<const PropertyRule> rules, Owner owner) {
  for (const auto& [name, value] : properties) {
    if (name.empty()) {
      throw SchemaViolation(std::string(owner) + ": empty property key");
    }
    for (const PropertyRule& rule : rules) {
      if (rule.name == name && !has_kind(value, rule.kind)) {
        throw SchemaViolation(std::string(owner) + ": property '" + name +
                              "' has the wrong type");
      }
    }
  }
}

bool in_vocabulary(std::string_view value,
                   std::span<const std::string_view> vocabulary) {
  return std::find(vocabulary.begin(), vocabulary.end(), value) !=
         vocabulary.end();
}

void validate_node_impl(NodeLabel label, const PropertyMap& properties) {
  check_properties(properties, node_rules(label), to_string(label));
  if (label == NodeLabel::kCase) {
    if (auto it = properties.find("year"); it != properties.end()) {
      auto year = std::get<std::int64_t>(it->second);
      if (year < 1000 || year > 9999) {
        throw SchemaViolation("Case: year must be a 4-digit integer, got " +
                              std::to_string(year));
      }
    }
  }
}

void validate_edge_impl(EdgeType type, const PropertyMap& properties) {
  check_properties(properties, edge_rules(type), to_string(type));
  auto text_of = [&](std::string_view key) -> const std::string* {
    auto it = properties.find(key);
    return it == properties.end() ? nullptr
                                  : std::get_if<std::string>(&it->second);
  };
  if (type == EdgeType::kConflictsWith) {
    if (const auto* ct = text_of("conflict_type");
        ct && !in_vocabulary(*ct, kConflictTypes)) {
      throw SchemaViolation("CONFLICTS_WITH: unknown conflict_type '" + *ct +
                            "'");
    }
  } else if (type == EdgeType::kResolvedBy) {
    if (const auto* rt = text_of("resolution_type");
        rt && !in_vocabulary(*rt, kResolutionTypes)) {
      throw SchemaViolation("RESOLVED_BY: unknown resolution_type '" + *rt +
                            "'");
    }
  } else if (type == EdgeType::kPrecedes) {
    if (auto it = properties.find("time_gap_days"); it != properties.end() &&
                                                    std::get<std::int64_t>(
                                                        it->second) < 0) {
      throw SchemaViolation("PRECEDES: time_gap_days must be >= 0");
    }
  }
}

void shallow_update(PropertyMap& target, const PropertyMap& update) {
  for (const auto& [name, value] : update) target.insert_or_assign(name, value);
}

template <typename Map>
const std::string* text_property(const Map& properties, std::string_view name) {
  auto it = properties.find(name);
  if (it == properties.end()) return nullptr;
  return std::get_if<std::string>(&it->second);
}

template <typename Map>
std::optional<std::int64_t> int_property(const Map& properties,
                                         std::string_view name) {
  auto it = properties.find(name);
  if (it == properties.end()) return std::nullopt;
  if (const auto* v = std::get_if<std::int64_t>(&it->second)) return *v;
  return std::nullopt;
}

template <typename Map>
std::optional<bool> bool_property(const Map& properties,
                                  std::string_view name) {
  auto it = properties.find(name);
  if (it == properties.end()) return std::nullopt;
  if (const auto* v = std::get_if<bool>(&it->second)) return *v;
  return std::nullopt;
}

}  // namespace

void validate_node_properties(NodeLabel label, const PropertyMap& properties) {
  validate_node_impl(label, properties);
}

void validate_edge_properties(EdgeType type, const PropertyMap& properties) {
  validate_edge_impl(type, properties);
}

std::string fold_case(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string describe(const Node& node) {
  return std::string(to_string(node.label)) + "[" + node.key + "]";
}

const std::string* Node::text(std::string_view name) const {
  return text_property(properties, name);
}
std::optional<std::int64_t> Node::integer(std::string_view name) const {
  return int_property(properties, name);
}
std::optional<bool> Node::boolean(std::string_view name) const {
  return bool_property(properties, name);
}
const std::string* Edge::text(std::string_view name) const {
  return text_property(properties, name);
}
std::optional<std::int64_t> Edge::integer(std::string_view name) const {
  return int_property(properties, name);
}
std::optional<bool> Edge::boolean(std::string_view name) const {
  return bool_property(properties, name);
}

NodeId LegalGraph::merge_node(NodeLabel label, std::string_view key,
                              const PropertyMap& properties) {
  if (key.empty()) {
    throw SchemaViolation(std::string(to_string(label)) + ": empty merge key");
  }
  validate_node_impl(label, properties);

  auto& index = by_key_[label];
  if (auto it = index.find(key); it != index.end()) {
    Node& existing = nodes_[it->second.value];
    PropertyMap merged = existing.properties;
    shallow_update(merged, properties);
    validate_node_impl(label, merged);
    existing.properties = std::move(merged);
    return existing.id;
  }

  NodeId id{static_cast<std::uint32_t>(nodes_.size())};
  nodes_.push_back(Node{id, label, std::string(key), properties});
  out_.emplace_back();
  in_.emplace_back();
  index.emplace(std::string(key), id);
  by_folded_key_[label].try_emplace(fold_case(key), id);
  return id;
}

EdgeId LegalGraph::merge_edge(EdgeType type, const NodeRef& src,
                              const NodeRef& dst,
                              const PropertyMap& properties) {
  const Node* s = get_node(src.label, src.key);
  if (s == nullptr) {
    throw MissingEndpoint(std::string(to_string(type)) +
                          ": source not found: " +
                          std::string(to_string(src.label)) + "[" + src.key +
                          "]");
  }
  const Node* d = get_node(dst.label, dst.key);
  if (d == nullptr) {
    throw MissingEndpoint(std::string(to_string(type)) +
                          ": target not found: " +
                          std::string(to_string(dst.label)) + "[" + dst.key +
                          "]");
  }
  return merge_edge(type, s->id, d->id, properties);
}

EdgeId LegalGraph::merge_edge(EdgeType type, NodeId src, NodeId dst,
                              const PropertyMap& properties) {
  if (!contains(src) || !contains(dst)) {
    throw MissingEndpoint(std::string(to_string(type)) +
                          ": endpoint id out of range");
  }
  const Node& s = nodes_[src.value];
  const Node& d = nodes_[dst.value];
  if (!endpoints_legal(type, s.label, d.label)) {
    throw IllegalEndpoints(std::string(to_string(type)) + " cannot connect " +
                           describe(s) + " to " + describe(d));
  }
  validate_edge_impl(type, properties);

  EdgeKey key{type, src.value, dst.value};
  if (auto it = edge_index_.find(key); it != edge_index_.end()) {
    Edge& existing = edges_[it->second.value];
    PropertyMap merged = existing.properties;
    shallow_update(merged, properties);
    validate_edge_impl(type, merged);
    existing.properties = std::move(merged);
    return existing.id;
  }

  EdgeId id{static_cast<std::uint32_t>(edges_.size())};
  edges_.push_back(Edge{id, type, src, dst, properties});
  out_[src.value].push_back(id);
  in_[dst.value].push_back(id);
  edge_index_.emplace(key, id);
  return id;
}

const Node* LegalGraph::get_node(NodeLabel label, std::string_view key) const {
  auto by_label = by_key_.find(label);
  if (by_label == by_key_.end()) return nullptr;
  auto it = by_label->second.find(key);
  return it == by_label->second.end() ? nullptr : &nodes_[it->second.value];
}

const Node* LegalGraph::find_node_folded(NodeLabel label,
                                         std::string_view key) const {
  if (const Node* exact = get_node(label, key)) return exact;
  auto by_label = by_folded_key_.find(label);
  if (by_label == by_folded_key_.end()) return nullptr;
  auto it = by_label->second.find(fold_case(key));
  return it == by_label->second.end() ? nullptr : &nodes_[it->second.value];
}

const Node& LegalGraph::node(NodeId id) const { return checked_node(id); }

const Edge& LegalGraph::edge(EdgeId id) const {
  if (id.value >= edges_.size()) {
    throw std::out_of_range("edge id " + std::to_string(id.value));
  }
  return edges_[id.value];
}

const Node& LegalGraph::checked_node(NodeId id) const {
  if (!contains(id)) {
    throw UnknownNode("node id " + std::to_string(id.value) + " not in graph");
  }
  return nodes_[id.value];
}

bool LegalGraph::edge_order_less(EdgeId a, EdgeId b) const {
  const Edge& ea = edges_[a.value];
  const Edge& eb = edges_[b.value];
  const Node& da = nodes_[ea.dst.value];
  const Node& db = nodes_[eb.dst.value];
  const Node& sa = nodes_[ea.src.value];
  const Node& sb = nodes_[eb.src.value];
  return std::tie(ea.type, da.label, da.key, sa.label, sa.key) <
         std::tie(eb.type, db.label, db.key, sb.label, sb.key);
}

std::vector<Adjacent> LegalGraph::neighbors(NodeId id, EdgeType type,
                                            Direction direction) const {
  return neighbors(id, EdgeTypeSet{type}, direction);
}

std::vector<Adjacent> LegalGraph::neighbors(NodeId id, EdgeTypeSet types,
                                            Direction direction) const {
  checked_node(id);
  std::vector<EdgeId> hits;
  if (direction != Direction::kIn) {
    for (EdgeId e : out_[id.value]) {
      if (types.contains(edges_[e.value].type)) hits.push_back(e);
    }
  }
  if (direction != Direction::kOut) {
    for (EdgeId e : in_[id.value]) {
      const Edge& edge = edges_[e.value];
      // A self-loop was already collected on the outgoing side.
      if (direction == Direction::kBoth && edge.src == edge.dst) continue;
      if (types.contains(edge.type)) hits.push_back(e);
    }
  }
  std::sort(hits.begin(), hits.end(),
            [this](EdgeId a, EdgeId b) { return edge_order_less(a, b); });

  std::vector<Adjacent> result;
  result.reserve(hits.size());
  for (EdgeId e : hits) {
    const Edge& edge = edges_[e.value];
    result.push_back({e, edge.src == id ? edge.dst : edge.src});
  }
  return result;
}

std::optional<Path> LegalGraph::find_path(NodeId src, NodeId dst,
                                          EdgeTypeSet allowed,
                                          int max_depth) const {
  if (max_depth < 1) {
    throw std::invalid_argument("find_path: max_depth must be >= 1");
  }
  checked_node(src);
  checked_node(dst);
  if (src == dst) return Path{{src}, {}};

  constexpr std::uint32_t kUnseen = UINT32_MAX;
  std::vector<std::uint32_t> parent_edge(nodes_.size(), kUnseen);
  std::vector<int> depth(nodes_.size(), -1);
  depth[src.value] = 0;
  std::deque<NodeId> queue{src};

  while (!queue.empty()) {
    NodeId current = queue.front();
    queue.pop_front();
    if (depth[current.value] == max_depth) continue;
    for (const Adjacent& hop : neighbors(current, allowed, Direction::kOut)) {
      if (depth[hop.node.value] != -1) continue;
      depth[hop.node.value] = depth[current.value] + 1;
      parent_edge[hop.node.value] = hop.edge.value;
      if (hop.node == dst) {
        Path path;
        for (NodeId at = dst; at != src;) {
          const Edge& e = edges_[parent_edge[at.value]];
          path.edges.push_back(e.id);
          path.nodes.push_back(at);
          at = e.src;
        }
        path.nodes.push_back(src);
        std::reverse(path.nodes.begin(), path.nodes.end());
        std::reverse(path.edges.begin(), path.edges.end());
        return path;
      }
      queue.push_back(hop.node);
    }
  }
  return std::nullopt;
}

std::vector<NodeId> LegalGraph::nodes_with_label(NodeLabel label) const {
  std::vector<NodeId> ids;
  if (auto it = by_key_.find(label); it != by_key_.end()) {
    ids.reserve(it->second.size());
    for (const auto& [key, id] : it->second) ids.push_back(id);
  }
  return ids;
}

std::vector<EdgeId> LegalGraph::edges_of_type(EdgeType type) const {
  std::vector<EdgeId> ids;
  for (const Edge& e : edges_) {
    if (e.type == type) ids.push_back(e.id);
  }
  std::sort(ids.begin(), ids.end(),
            [this](EdgeId a, EdgeId b) { return edge_order_less(a, b); });
  return ids;
}

std::optional<EdgeId> LegalGraph::find_edge(EdgeType type, NodeId src,
                                            NodeId dst) const {
  auto it = edge_index_.find(EdgeKey{type, src.value, dst.value});
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

GraphStats LegalGraph::stats() const {
  GraphStats s;
  for (NodeLabel label : kAllNodeLabels) s.node_count_by_label[label] = 0;
  for (EdgeType type : kAllEdgeTypes) s.edge_count_by_type[type] = 0;
  for (const Node& n : nodes_) ++s.node_count_by_label[n.label];
  for (const Edge& e : edges_) ++s.edge_count_by_type[e.type];
  s.total_nodes = nodes_.size();
  s.total_edges = edges_.size();
  return s;
}

}  // namespace irac

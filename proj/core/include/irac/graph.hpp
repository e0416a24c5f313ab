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

// In-memory typed property graph for the IRAC schema.
//
// Nodes are identified by (label, key) and edges by (type, src, dst); every
// write is a merge, so replaying the same input never grows the graph.
// Query results are ordered by (edge type, dst label, dst key, src label,
// src key) so that traversal output is reproducible.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "irac/schema.hpp"

namespace irac {

using PropertyValue =
    std::variant<std::string, std::int64_t, bool, std::vector<std::string>>;
using PropertyMap = std::map<std::string, PropertyValue, std::less<>>;

struct NodeId {
  std::uint32_t value = 0;
  friend auto operator<=>(NodeId, NodeId) = default;
};

struct EdgeId {
  std::uint32_t value = 0;
  friend auto operator<=>(EdgeId, EdgeId) = default;
};

/// A node address that survives snapshots: label plus merge key.
struct NodeRef {
  NodeLabel label;
  std::string key;
  friend auto operator<=>(const NodeRef&, const NodeRef&) = default;
};

struct Node {
  NodeId id;
  NodeLabel label;
  std::string key;
  PropertyMap properties;

  const std::string* text(std::string_view name) const;
  std::optional<std::int64_t> integer(std::string_view name) const;
  std::optional<bool> boolean(std::string_view name) const;
  NodeRef ref() const { return {label, key}; }
};

struct Edge {
  EdgeId id;
  EdgeType type;
  NodeId src;
  NodeId dst;
  PropertyMap properties;

  const std::string* text(std::string_view name) const;
  std::optional<std::int64_t> integer(std::string_view name) const;
  std::optional<bool> boolean(std::string_view name) const;
};

enum class Direction { kOut, kIn, kBoth };

/// One hop from a node: the edge and the node at its other end.
struct Adjacent {
  EdgeId edge;
  NodeId node;
  friend bool operator==(const Adjacent&, const Adjacent&) = default;
};

/// Alternating node/edge sequence; `nodes.size() == edges.size() + 1`.
struct Path {
  std::vector<NodeId> nodes;
  std::vector<EdgeId> edges;
  std::size_t length() const { return edges.size(); }
};

struct GraphStats {
  std::map<NodeLabel, std::size_t> node_count_by_label;
  std::map<EdgeType, std::size_t> edge_count_by_type;
  std::size_t total_nodes = 0;
  std::size_t total_edges = 0;
  friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

class LegalGraph {
 public:
  /// Creates (label, key) or shallow-updates its properties. Existing
  /// properties are overwritten key by key and never removed.
  /// Throws SchemaViolation on an empty key or a mistyped property.
  NodeId merge_node(NodeLabel label, std::string_view key,
                    const PropertyMap& properties = {});

  /// Creates (type, src, dst) or shallow-updates its properties.
  /// Throws MissingEndpoint, IllegalEndpoints or SchemaViolation.
  EdgeId merge_edge(EdgeType type, const NodeRef& src, const NodeRef& dst,
                    const PropertyMap& properties = {});
  EdgeId merge_edge(EdgeType type, NodeId src, NodeId dst,
                    const PropertyMap& properties = {});

  /// Exact (label, key) lookup; nullptr when absent.
  const Node* get_node(NodeLabel label, std::string_view key) const;
  /// Case-insensitive (label, key) lookup. Exact matches win.
  const Node* find_node_folded(NodeLabel label, std::string_view key) const;

  const Node& node(NodeId id) const;
  const Edge& edge(EdgeId id) const;
  bool contains(NodeId id) const { return id.value < nodes_.size(); }

  /// Edges of `type` touching `id` in the given direction. Throws UnknownNode.
  std::vector<Adjacent> neighbors(NodeId id, EdgeType type,
                                  Direction direction) const;
  /// Same, across every type in `types`.
  std::vector<Adjacent> neighbors(NodeId id, EdgeTypeSet types,
                                  Direction direction) const;

  /// Shortest directed path from `src` to `dst` over `allowed` edge types,
  /// at most `max_depth` edges. `src == dst` yields a zero-length path.
  /// Throws UnknownNode, or std::invalid_argument when max_depth < 1.
  std::optional<Path> find_path(NodeId src, NodeId dst, EdgeTypeSet allowed,
                                int max_depth) const;

  /// Ids of all nodes with `label`, ordered by key.
  std::vector<NodeId> nodes_with_label(NodeLabel label) const;
  /// Ids of all edges of `type`, in canonical order.
  std::vector<EdgeId> edges_of_type(EdgeType type) const;
  std::optional<EdgeId> find_edge(EdgeType type, NodeId src, NodeId dst) const;

  std::span<const Node> nodes() const { return nodes_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  GraphStats stats() const;

 private:
  using EdgeKey = std::tuple<EdgeType, std::uint32_t, std::uint32_t>;

  bool edge_order_less(EdgeId a, EdgeId b) const;
  const Node& checked_node(NodeId id) const;

  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  std::map<NodeLabel, std::map<std::string, NodeId, std::less<>>> by_key_;
  std::map<NodeLabel, std::map<std::string, NodeId, std::less<>>> by_folded_key_;
  std::map<EdgeKey, EdgeId> edge_index_;
};

/// Many-readers-or-one-writer wrapper. Readers see a consistent graph;
/// writers are serialized.
class SharedGraph {
 public:
  SharedGraph() = default;
  explicit SharedGraph(LegalGraph graph) : graph_(std::move(graph)) {}

  template <typename Fn>
  decltype(auto) read(Fn&& fn) const {
    std::shared_lock lock(mutex_);
    return std::forward<Fn>(fn)(static_cast<const LegalGraph&>(graph_));
  }

  template <typename Fn>
  decltype(auto) write(Fn&& fn) {
    std::unique_lock lock(mutex_);
    return std::forward<Fn>(fn)(graph_);
  }

 private:
  mutable std::shared_mutex mutex_;
  LegalGraph graph_;
};

/// Schema checks applied by merge_node / merge_edge. Throw SchemaViolation.
void validate_node_properties(NodeLabel label, const PropertyMap& properties);
void validate_edge_properties(EdgeType type, const PropertyMap& properties);

/// Lower-cased copy, ASCII only.
std::string fold_case(std::string_view text);

/// "Label[key]" rendering used in diagnostics and path descriptions.
std::string describe(const Node& node);

}  // namespace irac

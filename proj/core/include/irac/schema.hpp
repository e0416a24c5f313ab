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

// IRAC graph schema: node labels, edge types, endpoint legality, and the
// typed attributes each element may carry.

#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string_view>

namespace irac {

enum class NodeLabel : std::uint8_t {
  kCase,
  kJudge,
  kStatute,
  kSection,
  kLegalIssue,
  kRule,
  kArgument,
  kProceduralEvent,
  kOutcome,
  kJurisdiction,
};

inline constexpr std::array<NodeLabel, 10> kAllNodeLabels = {
    NodeLabel::kCase,       NodeLabel::kJudge,           NodeLabel::kStatute,
    NodeLabel::kSection,    NodeLabel::kLegalIssue,      NodeLabel::kRule,
    NodeLabel::kArgument,   NodeLabel::kProceduralEvent, NodeLabel::kOutcome,
    NodeLabel::kJurisdiction,
};

enum class EdgeType : std::uint8_t {
  kCites,
  kOverrules,
  kDistinguishes,
  kConflictsWith,
  kResolvedBy,
  kNarrowedBy,
  kTriggers,
  kPrecedes,
  kAppliesRule,
  kResultsIn,
  kAddresses,
  kGovernedBy,
};

inline constexpr std::array<EdgeType, 12> kAllEdgeTypes = {
    EdgeType::kCites,       EdgeType::kOverrules,     EdgeType::kDistinguishes,
    EdgeType::kConflictsWith, EdgeType::kResolvedBy,  EdgeType::kNarrowedBy,
    EdgeType::kTriggers,    EdgeType::kPrecedes,      EdgeType::kAppliesRule,
    EdgeType::kResultsIn,   EdgeType::kAddresses,     EdgeType::kGovernedBy,
};

/// Wire names: "Case", "ProceduralEvent", ...
std::string_view to_string(NodeLabel label);
/// Wire names: "CITES", "CONFLICTS_WITH", ...
std::string_view to_string(EdgeType type);

std::optional<NodeLabel> parse_node_label(std::string_view name);
std::optional<EdgeType> parse_edge_type(std::string_view name);

/// True when an edge of `type` may connect a `src` node to a `dst` node.
bool endpoints_legal(EdgeType type, NodeLabel src, NodeLabel dst);

/// Small value-type set of edge types.
class EdgeTypeSet {
 public:
  constexpr EdgeTypeSet() = default;
  constexpr EdgeTypeSet(std::initializer_list<EdgeType> types) {
    for (EdgeType t : types) insert(t);
  }

  static constexpr EdgeTypeSet all() {
    EdgeTypeSet s;
    for (EdgeType t : kAllEdgeTypes) s.insert(t);
    return s;
  }

  constexpr void insert(EdgeType t) { bits_ |= bit(t); }
  constexpr bool contains(EdgeType t) const { return (bits_ & bit(t)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }

 private:
  static constexpr std::uint32_t bit(EdgeType t) {
    return std::uint32_t{1} << static_cast<unsigned>(t);
  }
  std::uint32_t bits_ = 0;
};

// Attribute vocabularies for the conflict-typed edges.
inline constexpr std::array<std::string_view, 3> kConflictTypes = {
    "coordinate_bench", "per_incuriam", "distinguished"};
inline constexpr std::array<std::string_view, 3> kResolutionTypes = {
    "larger_bench", "full_bench", "constitutional_bench"};

}  // namespace irac

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

#include "irac/schema.hpp"

namespace irac {

std::string_view to_string(NodeLabel label) {
  switch (label) {
    case NodeLabel::kCase: return "Case";
    case NodeLabel::kJudge: return "Judge";
    case NodeLabel::kStatute: return "Statute";
    case NodeLabel::kSection: return "Section";
    case NodeLabel::kLegalIssue: return "LegalIssue";
    case NodeLabel::kRule: return "Rule";
    case NodeLabel::kArgument: return "Argument";
    case NodeLabel::kProceduralEvent: return "ProceduralEvent";
    case NodeLabel::kOutcome: return "Outcome";
    case NodeLabel::kJurisdiction: return "Jurisdiction";
  }
  return "?";
}

std::string_view to_string(EdgeType type) {
  switch (type) {
    case EdgeType::kCites: return "CITES";
    case EdgeType::kOverrules: return "OVERRULES";
    case EdgeType::kDistinguishes: return "DISTINGUISHES";
    case EdgeType::kConflictsWith: return "CONFLICTS_WITH";
    case EdgeType::kResolvedBy: return "RESOLVED_BY";
    case EdgeType::kNarrowedBy: return "NARROWED_BY";
    case EdgeType::kTriggers: return "TRIGGERS";
    case EdgeType::kPrecedes: return "PRECEDES";
    case EdgeType::kAppliesRule: return "APPLIES_RULE";
    case EdgeType::kResultsIn: return "RESULTS_IN";
    case EdgeType::kAddresses: return "ADDRESSES";
    case EdgeType::kGovernedBy: return "GOVERNED_BY";
  }
  return "?";
}

std::optional<NodeLabel> parse_node_label(std::string_view name) {
  for (NodeLabel label : kAllNodeLabels) {
    if (to_string(label) == name) return label;
  }
  return std::nullopt;
}

std::optional<EdgeType> parse_edge_type(std::string_view name) {
  for (EdgeType type : kAllEdgeTypes) {
    if (to_string(type) == name) return type;
  }
  return std::nullopt;
}

bool endpoints_legal(EdgeType type, NodeLabel src, NodeLabel dst) {
  using L = NodeLabel;
  switch (type) {
    case EdgeType::kCites:
      return src == L::kCase &&
             (dst == L::kCase || dst == L::kSection || dst == L::kStatute);
    case EdgeType::kOverrules:
    case EdgeType::kDistinguishes:
    case EdgeType::kConflictsWith:
    case EdgeType::kResolvedBy:
    case EdgeType::kNarrowedBy:
      return src == L::kCase && dst == L::kCase;
    case EdgeType::kTriggers:
    case EdgeType::kPrecedes:
      return src == L::kProceduralEvent && dst == L::kProceduralEvent;
    case EdgeType::kAppliesRule:
      return src == L::kCase && dst == L::kRule;
    case EdgeType::kResultsIn:
      return (src == L::kCase && dst == L::kOutcome) ||
             (src == L::kProceduralEvent &&
              (dst == L::kProceduralEvent || dst == L::kOutcome));
    case EdgeType::kAddresses:
      return (src == L::kCase || src == L::kArgument) && dst == L::kLegalIssue;
    case EdgeType::kGovernedBy:
      return (src == L::kCase || src == L::kLegalIssue) &&
             (dst == L::kSection || dst == L::kStatute);
  }
  return false;
}

}  // namespace irac

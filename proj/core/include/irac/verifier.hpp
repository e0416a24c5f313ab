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

// Claim verification against the graph.
//
// A claim is accepted only when the graph witnesses each of its parts:
// every cited case exists and is not overruled, a claimed rule is applied
// by the citing case, cited provisions are unrepealed, and a claimed
// procedural transition exists as a TRIGGERS edge. Absence is a veto.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "irac/graph.hpp"

namespace irac {

enum class Status { kValid, kInvalid, kConflict, kStale };

std::string_view to_string(Status status);
std::optional<Status> parse_status(std::string_view name);

inline constexpr std::string_view kHallucinationNote =
    "Citations not found in graph. Possible hallucination.";
inline constexpr std::string_view kNoCitationsReason = "no_citations";

struct ProceduralClaim {
  std::string current_event_type;
  std::string next_event_type;
  friend bool operator==(const ProceduralClaim&, const ProceduralClaim&) = default;
};

struct Claim {
  std::string answer_text;
  std::vector<std::string> cited_cases;
  std::vector<std::string> cited_sections;
  std::optional<std::string> claimed_rule;  // Rule key or rule wording
  std::optional<ProceduralClaim> procedural_claim;
  friend bool operator==(const Claim&, const Claim&) = default;
};

/// Normalizes and deduplicates citations and section keys. Blank entries
/// are dropped.
Claim normalize_claim(Claim claim);

struct CitationCheck {
  bool exists = false;
  bool stub = false;
  std::optional<NodeId> id;
};

CitationCheck check_citation_exists(const LegalGraph& graph, std::string_view citation);

/// Citations of every case with an OVERRULES edge into `citation`, ordered
/// by (year, citation). Throws UnknownCitation.
std::vector<std::string> check_overruled(const LegalGraph& graph,
                                         std::string_view citation);

struct ConflictRecord {
  std::string case_a;
  std::string case_b;
  std::string conflict_type;
  bool unresolved = true;
  std::optional<std::string> resolution_type;
  friend bool operator==(const ConflictRecord&, const ConflictRecord&) = default;
};

/// One record per CONFLICTS_WITH edge between two members of `citations`.
/// A conflict is resolved when either endpoint has an outgoing RESOLVED_BY.
/// Citations absent from the graph are skipped.
std::vector<ConflictRecord> check_conflicts(const LegalGraph& graph,
                                            std::span<const std::string> citations);

struct FreshnessCheck {
  std::vector<std::string> stale;    // repealed, directly or via the statute
  std::vector<std::string> unknown;  // not in the graph
};

/// Accepts Section keys ("CrPC-1973/439"), Statute keys, or free mentions
/// such as "Section 439 CrPC".
FreshnessCheck check_statute_freshness(const LegalGraph& graph,
                                       std::span<const std::string> sections);

/// Path description witnessing `citation` for `claim`, or nullopt when a
/// claimed element has no witness. Stubs witness only the bare case.
std::optional<std::string> find_support_path(const Claim& claim,
                                             std::string_view citation,
                                             const LegalGraph& graph);

/// True when a TRIGGERS edge links events of the two types somewhere.
bool transition_witnessed(const LegalGraph& graph, const ProceduralClaim& step);

struct OverruledCitation {
  std::string citation;
  std::string overruled_by;
  friend bool operator==(const OverruledCitation&, const OverruledCitation&) = default;
};

struct VerificationReport {
  Status status = Status::kInvalid;
  double confidence = 0.0;
  std::string confidence_label;
  std::vector<std::string> grounded;
  std::vector<std::string> missing;
  std::vector<OverruledCitation> overruled;
  std::vector<ConflictRecord> conflicts;
  std::vector<std::string> stale_sections;
  std::vector<std::string> support_paths;
  std::string note;

  // Diagnostics kept out of the serialized report.
  std::vector<std::string> stubs;
  std::vector<std::string> unsupported;  // grounded but no support path
  std::vector<std::string> unknown_sections;
  bool procedural_unwitnessed = false;

  bool has_unresolved_conflict() const;
  /// Every citation has a valid support path (and there is at least one).
  bool path_valid() const;
};

/// high >= 0.8, medium >= 0.5, low otherwise.
std::string_view confidence_label(double confidence);

/// Never throws on claim content; every input yields a report.
VerificationReport verify(const Claim& claim, const LegalGraph& graph);

nlohmann::json to_json(const ConflictRecord& record);
nlohmann::json to_json(const VerificationReport& report);

}  // namespace irac

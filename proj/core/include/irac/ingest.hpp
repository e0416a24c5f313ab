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

// Structured judgment records and their loading into the graph.
//
// A record describes one judgment: metadata, IRAC elements, statutes,
// typed precedent relations and the procedural event chain. Loading maps
// it onto merge keys:
//
//   Case            normalized citation
//   Statute         statute name            ("CrPC-1973")
//   Section         statute/number          ("CrPC-1973/439")
//   LegalIssue etc. citation#kind#ordinal   ("(2004) 7 SCC 528#rule#1")
//
// so re-loading any record, in any order, converges to the same graph.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "irac/graph.hpp"

namespace irac {

struct IssueEntry {
  std::string text;
  std::string category;
  friend bool operator==(const IssueEntry&, const IssueEntry&) = default;
};

struct RuleEntry {
  std::string text;
  friend bool operator==(const RuleEntry&, const RuleEntry&) = default;
};

struct SectionEntry {
  std::string number;
  bool repealed = false;
  friend bool operator==(const SectionEntry&, const SectionEntry&) = default;
};

struct StatuteEntry {
  std::string name;
  std::optional<std::string> title;
  bool repealed = false;
  std::vector<SectionEntry> sections;
  friend bool operator==(const StatuteEntry&, const StatuteEntry&) = default;
};

struct PrecedentEntry {
  std::string citation;
  EdgeType relation = EdgeType::kCites;
  PropertyMap attributes;
  friend bool operator==(const PrecedentEntry&, const PrecedentEntry&) = default;
};

struct TriggerSpec {
  std::optional<std::string> condition;
  friend bool operator==(const TriggerSpec&, const TriggerSpec&) = default;
};

struct ProceduralEventEntry {
  std::string event_type;
  std::int64_t order = 0;
  std::optional<std::string> date;  // ISO "YYYY-MM-DD"
  std::optional<std::string> court_level;
  /// Causal link to the next event in the chain (TRIGGERS edge).
  std::optional<TriggerSpec> triggers_next;
  /// The next event is this event's result (RESULTS_IN edge).
  bool results_in_next = false;
  friend bool operator==(const ProceduralEventEntry&,
                         const ProceduralEventEntry&) = default;
};

struct OutcomeEntry {
  std::string outcome_type;
  std::string text;
  friend bool operator==(const OutcomeEntry&, const OutcomeEntry&) = default;
};

struct JudgmentRecord {
  std::string citation;
  std::string name;
  std::string court;
  std::optional<std::int64_t> year;
  std::optional<std::int64_t> bench_size;
  std::optional<std::string> bench_type;
  std::string matter_type;
  std::string summary;
  std::vector<IssueEntry> issues;
  std::vector<RuleEntry> rules;
  std::vector<StatuteEntry> statutes;
  std::vector<PrecedentEntry> precedents;
  std::vector<ProceduralEventEntry> procedural_events;
  std::optional<OutcomeEntry> outcome;
  friend bool operator==(const JudgmentRecord&, const JudgmentRecord&) = default;
};

struct ParsedRecord {
  JudgmentRecord record;
  std::vector<std::string> warnings;  // e.g. ignored unknown fields
};

/// Validates and normalizes one record. Throws MalformedRecord naming the
/// offending field path.
ParsedRecord parse_record(const nlohmann::json& document);
ParsedRecord parse_record(std::string_view json_text);

/// A whole corpus: a JSON array, a single record object, or JSON lines.
/// Errors are reported as MalformedRecord with a "record[i]" path prefix.
std::vector<ParsedRecord> parse_corpus(std::string_view text);
std::vector<ParsedRecord> read_corpus(const std::filesystem::path& path);

nlohmann::json to_json(const JudgmentRecord& record);

struct LoadReport {
  std::size_t cases_loaded = 0;
  std::size_t nodes_merged = 0;
  std::size_t edges_merged = 0;
  std::vector<std::string> warnings;
};

/// Merges every record into `graph`. A precedent not (yet) in the corpus
/// becomes a stub Case (stub=true); loading its full record later clears the
/// flag and keeps existing edges. Never throws on per-record problems;
/// they become warnings.
LoadReport load(const std::vector<JudgmentRecord>& records, LegalGraph& graph);

nlohmann::json to_json(const LoadReport& report);

/// Best-effort metadata from the head of a judgment's raw text.
struct MetadataGuess {
  std::optional<std::string> citation;
  std::optional<std::string> court;
  std::optional<std::int64_t> year;
  std::optional<std::string> bench;
  double confidence = 0.0;  // populated fields / 4
};

/// Only the first kMetadataWindow characters of `text` are examined.
inline constexpr std::size_t kMetadataWindow = 2000;
MetadataGuess extract_metadata(std::string_view text);

nlohmann::json to_json(const MetadataGuess& guess);

/// Non-stub Case nodes with a year, bucketed by decade start (1940, 1950 ...).
std::map<int, std::size_t> compute_decade_histogram(const LegalGraph& graph);

/// "1940s" style labels.
std::string decade_label(int decade);

}  // namespace irac

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

// Graph-native evaluation metrics over labeled query runs and claims.
// Every metric carries its numerator and denominator; an empty denominator
// leaves the value undefined rather than zero.

#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "irac/graph.hpp"
#include "irac/pipeline.hpp"
#include "irac/procedural.hpp"
#include "irac/verifier.hpp"

namespace irac {

struct EvalTruth {
  std::set<std::string> expected_grounded;
  bool conflict_expected = false;
  std::optional<EventSequence> procedural_sequence;
  std::set<std::string> repealed_sections;
};

struct EvalRecord {
  std::string query;
  std::optional<PipelineOutput> output;  // absent when the run did not complete
  EvalTruth truth;
};

struct Metric {
  std::string name;
  std::size_t numerator = 0;
  std::size_t denominator = 0;
  std::optional<double> value;

  static Metric ratio(std::string name, std::size_t numerator, std::size_t denominator);
};

struct MetricReport {
  std::vector<Metric> metrics;
  Metric completion_rate;
  Metric abstention_rate;

  const Metric* find(std::string_view name) const;
};

/// Cited cases of non-abstained outputs that exist as Case nodes (stubs
/// included).
Metric citation_grounding_accuracy(std::span<const EvalRecord> records,
                                   const LegalGraph& graph);
/// Share of those citations that resolve only to stub nodes.
Metric stub_citation_fraction(std::span<const EvalRecord> records, const LegalGraph& graph);
/// Non-abstained outputs whose verification is VALID or CONFLICT.
Metric path_validity_rate(std::span<const EvalRecord> records);
/// Claims with at least one citation lacking a valid support path; a claim
/// without citations counts as lacking.
Metric hallucinated_precedent_rate(std::span<const Claim> claims, const LegalGraph& graph);
/// The complement: claims whose every citation has a valid support path.
Metric fully_path_valid_fraction(std::span<const Claim> claims, const LegalGraph& graph);
Metric procedural_consistency(std::span<const EvalRecord> records, const LegalGraph& graph);
Metric conflict_detection_rate(std::span<const EvalRecord> records);
Metric false_conflict_rate(std::span<const EvalRecord> records);
/// Section mentions in non-abstained answers that are unrepealed in the
/// graph and not listed in the truth's repealed sections.
Metric statute_freshness_rate(std::span<const EvalRecord> records, const LegalGraph& graph);
Metric completion_rate(std::span<const EvalRecord> records);
/// ABSTAINED outputs over completed records.
Metric abstention_rate(std::span<const EvalRecord> records);

/// Claims implied by the non-abstained outputs: citations plus the section
/// mentions resolved from the answer text.
std::vector<Claim> claims_from_records(std::span<const EvalRecord> records,
                                       const LegalGraph& graph);

MetricReport evaluate(std::span<const EvalRecord> records, const LegalGraph& graph);

nlohmann::json to_json(const Metric& metric);
nlohmann::json to_json(const MetricReport& report);
/// Aligned plain-text table.
std::string format_table(const MetricReport& report);

nlohmann::json to_json(const EvalRecord& record);
/// Throws MalformedRecord.
EvalRecord eval_record_from_json(const nlohmann::json& j);
/// JSON lines; blank lines skipped. Throws MalformedRecord with "record[i]".
std::vector<EvalRecord> parse_eval_records(std::string_view text);

}  // namespace irac

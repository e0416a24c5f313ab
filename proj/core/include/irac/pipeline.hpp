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

// Query orchestration: retrieve, generate, build a claim, verify, and
// revise or abstain. Every non-abstained answer has passed the verifier.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "irac/generator.hpp"
#include "irac/graph.hpp"
#include "irac/verifier.hpp"

namespace irac {

inline constexpr std::string_view kScopeNote =
    "Verification is relative to the ingested corpus graph. A verified answer is "
    "grounded in the available evidence, not a statement about all of Indian law.";
inline constexpr std::string_view kNoVerifiedAnswer =
    "No verified answer is available from the current corpus.";
inline constexpr std::string_view kUnresolvedResolution =
    "unresolved - refer to larger bench ruling if available";
inline constexpr std::string_view kAbstained = "ABSTAINED";
inline constexpr double kAbstainConfidence = 0.50;

struct PipelineConfig {
  int max_revisions = 2;
  int generator_timeout_seconds = 300;
  std::size_t retrieval_limit = 10;
  std::string generator_url;  // empty when a local generator is supplied
};

struct PipelineOutput {
  std::string answer;
  std::vector<std::string> citations;
  std::string verification;  // VALID, INVALID, CONFLICT, STALE or ABSTAINED
  double confidence = 0.0;
  std::string confidence_label;
  std::vector<std::string> supporting_paths;
  bool conflict = false;
  std::optional<std::string> conflict_type;
  std::optional<std::string> resolution;
  std::optional<std::string> procedural_next_step;
  int attempts = 0;
  std::string scope_note{kScopeNote};

  // Diagnostics, not serialized.
  std::vector<std::string> warnings;

  bool abstained() const { return verification == kAbstained; }
};

struct BuiltClaim {
  Claim claim;
  std::vector<std::string> warnings;
};

/// Normalized, deduplicated citations; section keys scanned from the answer.
/// Citation-like strings in the prose but not in the list become warnings.
BuiltClaim build_claim(const GeneratorResponse& response, const LegalGraph& graph);

PipelineOutput abstain_output(std::string_view reason, int attempts = 0);

/// Output record for a verified (non-abstained) answer.
PipelineOutput output_from_report(const GeneratorResponse& response, const Claim& claim,
                                  const VerificationReport& report, int attempts);

/// Throws GeneratorUnreachable; never returns an unverified answer.
PipelineOutput run_query(std::string_view query, const LegalGraph& graph,
                         Generator& generator, const PipelineConfig& config = {});

nlohmann::json to_json(const PipelineOutput& output);
/// Throws MalformedRecord.
PipelineOutput pipeline_output_from_json(const nlohmann::json& j);

}  // namespace irac

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

#include "irac/pipeline.hpp"

#include <stdexcept>

#include "irac/citation.hpp"
#include "irac/errors.hpp"
#include "irac/procedural.hpp"
#include "irac/references.hpp"
#include "irac/retrieval.hpp"

namespace irac {
namespace {

using json = nlohmann::json;

std::optional<std::string> optional_text(const json& j, std::string_view name) {
  auto it = j.find(name);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw MalformedRecord(std::string(name), "expected text");
  return it->get<std::string>();
}

}  // namespace

BuiltClaim build_claim(const GeneratorResponse& response, const LegalGraph& graph) {
  BuiltClaim out;
  out.claim.answer_text = response.answer_text;
  for (const std::string& raw : response.citations) {
    try {
      out.claim.cited_cases.push_back(normalize_citation(raw));
    } catch (const EmptyCitation&) {
      out.warnings.push_back("ignored empty citation in generator output");
    }
  }
  SectionScan sections = scan_sections(graph, response.answer_text);
  out.claim.cited_sections = sections.keys;
  for (const std::string& s : sections.unresolved) {
    out.warnings.push_back("section mention not resolved in graph: " + s);
  }
  out.claim = normalize_claim(std::move(out.claim));
  for (const std::string& c : scan_citations(response.answer_text)) {
    bool listed = false;
    for (const std::string& listed_c : out.claim.cited_cases) {
      listed = listed || same_citation(c, listed_c);
    }
    if (!listed) {
      out.warnings.push_back("citation in answer text but not in citation list: " + c);
    }
  }
  return out;
}

PipelineOutput abstain_output(std::string_view reason, int attempts) {
  PipelineOutput out;
  out.answer = std::string(kNoVerifiedAnswer);
  if (!reason.empty()) out.answer += " Reason: " + std::string(reason);
  out.verification = std::string(kAbstained);
  out.confidence = kAbstainConfidence;
  out.confidence_label = std::string(confidence_label(kAbstainConfidence));
  out.attempts = attempts;
  return out;
}

PipelineOutput output_from_report(const GeneratorResponse& response, const Claim& claim,
                                  const VerificationReport& report, int attempts) {
  PipelineOutput out;
  out.answer = response.answer_text;
  out.citations = claim.cited_cases;
  out.verification = std::string(to_string(report.status));
  out.confidence = report.confidence;
  out.confidence_label = report.confidence_label;
  out.supporting_paths = report.support_paths;
  out.attempts = attempts;
  for (const ConflictRecord& c : report.conflicts) {
    if (c.unresolved) {
      out.conflict = true;
      out.conflict_type = c.conflict_type;
      out.resolution = std::string(kUnresolvedResolution);
      break;
    }
  }
  if (!out.conflict && !report.conflicts.empty()) {
    const ConflictRecord& c = report.conflicts.front();
    out.conflict_type = c.conflict_type;
    out.resolution = "resolved by " + c.resolution_type.value_or("unspecified");
  }
  return out;
}

PipelineOutput run_query(std::string_view query, const LegalGraph& graph,
                         Generator& generator, const PipelineConfig& config) {
  if (config.max_revisions < 0) throw std::invalid_argument("max_revisions must be >= 0");
  if (config.generator_timeout_seconds < 1) {
    throw std::invalid_argument("generator timeout must be >= 1 second");
  }
  RetrievalResult retrieval;
  std::vector<std::string> warnings;
  try {
    retrieval = retrieve(Query{std::string(query), {}, {}, {}}, graph,
                         std::max<std::size_t>(config.retrieval_limit, 1));
  } catch (const std::invalid_argument& e) {
    warnings.push_back(std::string("retrieval skipped: ") + e.what());
  }
  if (retrieval.candidates.empty()) warnings.push_back("no candidate cases retrieved");

  GeneratorRequest request;
  request.query = std::string(query);
  request.candidates = retrieval.candidates;
  const int max_attempts = 1 + config.max_revisions;
  const std::chrono::seconds timeout{config.generator_timeout_seconds};
  std::string last_reason = "no attempt made";

  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    request.attempt = attempt;
    GenerationResult result = generator.generate(request, timeout);
    if (!result.response) {
      last_reason = "generation attempt " + std::to_string(attempt) + " failed: " +
                    result.failure;
      warnings.push_back(last_reason);
      request.rejection_reason = last_reason;
      continue;
    }
    if (result.response->abstain) {
      PipelineOutput out = abstain_output(retrieval.candidates.empty()
                                              ? "no candidate cases were retrieved"
                                              : "the generator declined to answer",
                                          attempt);
      out.warnings = std::move(warnings);
      return out;
    }
    BuiltClaim built = build_claim(*result.response, graph);
    warnings.insert(warnings.end(), built.warnings.begin(), built.warnings.end());
    VerificationReport report = verify(built.claim, graph);
    if (report.status == Status::kValid || report.status == Status::kConflict) {
      PipelineOutput out = output_from_report(*result.response, built.claim, report, attempt);
      if (auto state = infer_procedural_state(query, graph)) {
        out.procedural_next_step = procedural_next_step(graph, *state);
      }
      out.warnings = std::move(warnings);
      return out;
    }
    last_reason = std::string(to_string(report.status)) + ": " + report.note;
    request.rejection_reason = last_reason;
  }
  PipelineOutput out = abstain_output(
      "no answer passed verification after " + std::to_string(max_attempts) +
          " attempts; last rejection: " + last_reason,
      max_attempts);
  out.warnings = std::move(warnings);
  return out;
}

json to_json(const PipelineOutput& o) {
  auto opt = [](const std::optional<std::string>& v) { return v ? json(*v) : json(); };
  return json{{"answer", o.answer},
              {"citations", o.citations},
              {"verification", o.verification},
              {"confidence", o.confidence},
              {"confidence_label", o.confidence_label},
              {"supporting_paths", o.supporting_paths},
              {"conflict", o.conflict},
              {"conflict_type", opt(o.conflict_type)},
              {"resolution", opt(o.resolution)},
              {"procedural_next_step", opt(o.procedural_next_step)},
              {"attempts", o.attempts},
              {"scope_note", o.scope_note}};
}

PipelineOutput pipeline_output_from_json(const json& j) {
  if (!j.is_object()) throw MalformedRecord("output", "expected an object");
  PipelineOutput o;
  o.answer = optional_text(j, "answer").value_or("");
  o.verification = optional_text(j, "verification").value_or("");
  if (o.verification != kAbstained && !parse_status(o.verification)) {
    throw MalformedRecord("output.verification",
                          "unknown verification '" + o.verification + "'");
  }
  if (auto it = j.find("citations"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) throw MalformedRecord("output.citations", "expected a list");
    for (const json& c : *it) {
      if (!c.is_string()) throw MalformedRecord("output.citations", "expected text");
      o.citations.push_back(c.get<std::string>());
    }
  }
  if (auto it = j.find("supporting_paths"); it != j.end() && it->is_array()) {
    for (const json& p : *it) {
      if (p.is_string()) o.supporting_paths.push_back(p.get<std::string>());
    }
  }
  if (auto it = j.find("confidence"); it != j.end() && it->is_number()) {
    o.confidence = it->get<double>();
  }
  o.confidence_label = optional_text(j, "confidence_label")
                           .value_or(std::string(confidence_label(o.confidence)));
  if (auto it = j.find("conflict"); it != j.end() && it->is_boolean()) {
    o.conflict = it->get<bool>();
  }
  o.conflict_type = optional_text(j, "conflict_type");
  o.resolution = optional_text(j, "resolution");
  o.procedural_next_step = optional_text(j, "procedural_next_step");
  if (auto it = j.find("attempts"); it != j.end() && it->is_number_integer()) {
    o.attempts = it->get<int>();
  }
  o.scope_note = optional_text(j, "scope_note").value_or(std::string(kScopeNote));
  return o;
}

}  // namespace irac

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

// Procedural state machine over ProceduralEvent chains: next-step queries
// along TRIGGERS edges and temporal validation of event sequences.
// Event types are open vocabulary; transitions come only from the graph.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "irac/graph.hpp"

namespace irac {

struct ProceduralStep {
  std::string event_type;
  std::optional<std::string> court_level;
  std::optional<std::string> condition;
  friend bool operator==(const ProceduralStep&, const ProceduralStep&) = default;
};

struct SequenceEvent {
  std::string event_type;
  std::optional<std::string> date;  // ISO "YYYY-MM-DD"
  std::int64_t order = 0;
  friend bool operator==(const SequenceEvent&, const SequenceEvent&) = default;
};

using EventSequence = std::vector<SequenceEvent>;

/// Targets of TRIGGERS edges leaving any event of `current_event_type`,
/// deduplicated and ordered by (event_type, condition, court_level).
std::vector<ProceduralStep> next_steps(const LegalGraph& graph,
                                       std::string_view current_event_type);

struct SequenceValidation {
  bool valid = true;
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
};

/// Checks order monotonicity, date monotonicity, transition existence and
/// PRECEDES gap agreement for each consecutive pair.
SequenceValidation validate_sequence(const EventSequence& sequence,
                                     const LegalGraph& graph);

/// First element of next_steps, or nullopt for unknown or terminal states.
std::optional<std::string> procedural_next_step(const LegalGraph& graph,
                                                std::string_view current_event_type);

/// Current procedural state named or described in free text, e.g. "my bail
/// application was rejected" -> BAIL_DENIED. Event types present in the
/// graph and written out literally take precedence.
std::optional<std::string> infer_procedural_state(std::string_view text,
                                                  const LegalGraph& graph);

/// The event chain of one case in sequence order. Throws UnknownCitation.
EventSequence case_event_sequence(const LegalGraph& graph, std::string_view citation);

nlohmann::json to_json(const ProceduralStep& step);
nlohmann::json to_json(const SequenceValidation& validation);
nlohmann::json to_json(const EventSequence& sequence);
/// Throws MalformedRecord.
EventSequence event_sequence_from_json(const nlohmann::json& j);

}  // namespace irac

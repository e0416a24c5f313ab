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

// Candidate retrieval by graph traversal.
//
// Strategies: matter type, statute section, issue keywords, citation-chain
// expansion over the union of the first three, and conflict detection over
// the final ranked set. Stub cases are never returned.

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
#include "irac/verifier.hpp"

namespace irac {

inline constexpr std::string_view kStrategyMatterType = "matter_type";
inline constexpr std::string_view kStrategyStatuteSection = "statute_section";
inline constexpr std::string_view kStrategyIssueKeyword = "issue_keyword";
inline constexpr std::string_view kStrategyCitationChain = "citation_chain";

inline constexpr std::size_t kDefaultRetrievalLimit = 10;

struct Query {
  std::string text;
  std::optional<std::string> matter_type;
  std::vector<std::string> statute_refs;  // Section keys
  std::vector<std::string> keywords;
};

/// Fills matter_type, statute_refs and keywords from `text` where empty.
Query derive_query(Query query, const LegalGraph& graph);

struct Candidate {
  std::string citation;
  std::string name;
  std::string court;
  std::optional<std::int64_t> year;
  std::string summary;
  int authority_rank = 2;
  std::set<std::string> strategies;
  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct RetrievalResult {
  std::vector<Candidate> candidates;
  std::vector<ConflictRecord> candidate_conflicts;
};

/// Keyword-table classification; nullopt when no entry matches.
std::optional<std::string> classify_matter_type(std::string_view text);

/// Supreme Court 0, High Court 1, anything else 2.
int authority_rank(std::string_view court);

/// Cases reachable from `seeds` over outgoing CITES within `depth` hops,
/// seeds included. Throws UnknownCitation, or std::invalid_argument when
/// depth < 0.
std::set<std::string> expand_citation_chain(const LegalGraph& graph,
                                            std::span<const std::string> seeds,
                                            int depth);

/// Orders by (authority_rank, year desc, citation).
std::vector<Candidate> rank(std::vector<Candidate> candidates);

/// Throws std::invalid_argument when limit < 1 or the query is empty.
RetrievalResult retrieve(const Query& query, const LegalGraph& graph,
                         std::size_t limit = kDefaultRetrievalLimit);

nlohmann::json to_json(const Candidate& candidate);
nlohmann::json to_json(const RetrievalResult& result);

}  // namespace irac

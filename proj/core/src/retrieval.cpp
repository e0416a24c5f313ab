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

#include "irac/retrieval.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <map>
#include <stdexcept>

#include "irac/errors.hpp"
#include "irac/references.hpp"
#include "irac/text.hpp"

namespace irac {
namespace {

using json = nlohmann::json;
using CaseSet = std::set<NodeId>;

struct MatterEntry {
  std::string_view matter_type;
  std::vector<std::string_view> phrases;
};

// First matching row wins, so narrower phrases come first.
const std::vector<MatterEntry>& matter_table() {
  static const std::vector<MatterEntry> table = {
      {"anticipatory bail", {"anticipatory bail", "section 438", "pre arrest bail"}},
      {"bail", {"bail", "regular bail", "section 439", "custody release"}},
      {"contempt", {"contempt"}},
      {"service",
       {"reinstatement", "termination", "dismissal from service", "service",
        "promotion", "seniority", "pension", "disciplinary", "judicial officer"}},
      {"employment", {"workman", "wages", "retrenchment", "industrial dispute",
                      "employment", "employer"}},
      {"criminal appeal", {"criminal appeal", "conviction", "acquittal", "sentence",
                           "murder", "dowry"}},
      {"constitutional",
       {"fundamental right", "fundamental rights", "constitution", "constitutional",
        "article", "writ", "privacy", "basic structure", "liberty"}},
  };
  return table;
}

bool contains_phrase(const std::vector<std::string>& tokens, std::string_view phrase) {
  std::vector<std::string> words = tokenize(phrase);
  if (words.empty() || words.size() > tokens.size()) return false;
  for (std::size_t i = 0; i + words.size() <= tokens.size(); ++i) {
    if (std::equal(words.begin(), words.end(), tokens.begin() + static_cast<long>(i))) {
      return true;
    }
  }
  return false;
}

bool eligible(const Node& n) {
  return n.label == NodeLabel::kCase && !n.boolean("stub").value_or(false);
}

CaseSet by_matter_type(const LegalGraph& graph, const Query& q) {
  CaseSet out;
  if (!q.matter_type) return out;
  std::string wanted = fold_case(*q.matter_type);
  for (NodeId id : graph.nodes_with_label(NodeLabel::kCase)) {
    const Node& n = graph.node(id);
    const std::string* mt = n.text("matter_type");
    if (eligible(n) && mt && fold_case(*mt) == wanted) out.insert(id);
  }
  return out;
}

CaseSet by_statute_section(const LegalGraph& graph, const Query& q) {
  CaseSet out;
  for (const std::string& ref : q.statute_refs) {
    const Node* target = graph.find_node_folded(NodeLabel::kSection, ref);
    if (target == nullptr) target = graph.find_node_folded(NodeLabel::kStatute, ref);
    if (target == nullptr) continue;
    for (const Adjacent& a : graph.neighbors(
             target->id, EdgeTypeSet{EdgeType::kGovernedBy, EdgeType::kCites},
             Direction::kIn)) {
      if (eligible(graph.node(a.node))) out.insert(a.node);
    }
  }
  return out;
}

bool overlaps(const std::set<std::string>& keywords, std::string_view text) {
  for (const std::string& t : content_tokens(text)) {
    if (keywords.contains(t)) return true;
  }
  return false;
}

CaseSet by_issue_keyword(const LegalGraph& graph, const Query& q) {
  CaseSet out;
  std::set<std::string> keywords;
  for (const std::string& k : q.keywords) {
    for (std::string& t : tokenize(k)) {
      if (!is_stopword(t)) keywords.insert(std::move(t));
    }
  }
  if (keywords.empty()) return out;
  for (NodeId id : graph.nodes_with_label(NodeLabel::kCase)) {
    const Node& n = graph.node(id);
    if (!eligible(n)) continue;
    const std::string* summary = n.text("summary");
    bool hit = summary && overlaps(keywords, *summary);
    if (!hit) {
      for (const Adjacent& a : graph.neighbors(id, EdgeType::kAddresses, Direction::kOut)) {
        const std::string* text = graph.node(a.node).text("text");
        if (text && overlaps(keywords, *text)) {
          hit = true;
          break;
        }
      }
    }
    if (hit) out.insert(id);
  }
  return out;
}

// Nodes reached by at least one outgoing CITES hop from `seeds`.
CaseSet by_citation_chain(const LegalGraph& graph, const CaseSet& seeds) {
  CaseSet out;
  for (NodeId s : seeds) {
    for (const Adjacent& a : graph.neighbors(s, EdgeType::kCites, Direction::kOut)) {
      if (eligible(graph.node(a.node))) out.insert(a.node);
    }
  }
  return out;
}

Candidate make_candidate(const Node& n) {
  Candidate c;
  c.citation = n.text("citation") ? *n.text("citation") : n.key;
  if (const std::string* v = n.text("name")) c.name = *v;
  if (const std::string* v = n.text("court")) c.court = *v;
  c.year = n.integer("year");
  if (const std::string* v = n.text("summary")) c.summary = *v;
  c.authority_rank = authority_rank(c.court);
  return c;
}

}  // namespace

Query derive_query(Query query, const LegalGraph& graph) {
  if (!query.matter_type) query.matter_type = classify_matter_type(query.text);
  if (query.statute_refs.empty()) query.statute_refs = scan_sections(graph, query.text).keys;
  if (query.keywords.empty()) {
    for (const std::string& t : content_tokens(query.text)) query.keywords.push_back(t);
  }
  return query;
}

std::optional<std::string> classify_matter_type(std::string_view text) {
  std::vector<std::string> tokens = tokenize(text);
  for (const MatterEntry& entry : matter_table()) {
    for (std::string_view phrase : entry.phrases) {
      if (contains_phrase(tokens, phrase)) return std::string(entry.matter_type);
    }
  }
  return std::nullopt;
}

int authority_rank(std::string_view court) {
  std::string c = fold_case(court);
  if (c.find("supreme court") != std::string::npos) return 0;
  if (c.find("high court") != std::string::npos) return 1;
  return 2;
}

std::set<std::string> expand_citation_chain(const LegalGraph& graph,
                                            std::span<const std::string> seeds,
                                            int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  std::map<NodeId, int> seen;
  std::deque<NodeId> frontier;
  for (const std::string& s : seeds) {
    const Node* n = graph.find_node_folded(NodeLabel::kCase, s);
    if (n == nullptr) throw UnknownCitation("citation not in graph: " + s);
    if (seen.emplace(n->id, 0).second) frontier.push_back(n->id);
  }
  while (!frontier.empty()) {
    NodeId cur = frontier.front();
    frontier.pop_front();
    int d = seen[cur];
    if (d == depth) continue;
    for (const Adjacent& a : graph.neighbors(cur, EdgeType::kCites, Direction::kOut)) {
      if (graph.node(a.node).label != NodeLabel::kCase) continue;
      if (seen.emplace(a.node, d + 1).second) frontier.push_back(a.node);
    }
  }
  std::set<std::string> out;
  for (const auto& [id, d] : seen) {
    const Node& n = graph.node(id);
    out.insert(n.text("citation") ? *n.text("citation") : n.key);
  }
  return out;
}

std::vector<Candidate> rank(std::vector<Candidate> candidates) {
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.authority_rank != b.authority_rank) {
                return a.authority_rank < b.authority_rank;
              }
              auto ya = a.year.value_or(0);
              auto yb = b.year.value_or(0);
              if (ya != yb) return ya > yb;
              return a.citation < b.citation;
            });
  return candidates;
}

RetrievalResult retrieve(const Query& raw, const LegalGraph& graph, std::size_t limit) {
  if (limit < 1) throw std::invalid_argument("limit must be >= 1");
  if (trim(raw.text).empty() && !raw.matter_type && raw.statute_refs.empty() &&
      raw.keywords.empty()) {
    throw std::invalid_argument("query is empty");
  }
  Query q = derive_query(raw, graph);

  auto matter = std::async(std::launch::async, by_matter_type, std::cref(graph), std::cref(q));
  auto statute =
      std::async(std::launch::async, by_statute_section, std::cref(graph), std::cref(q));
  auto issue = std::async(std::launch::async, by_issue_keyword, std::cref(graph), std::cref(q));

  std::map<NodeId, std::set<std::string>> hits;
  auto collect = [&](const CaseSet& ids, std::string_view strategy) {
    for (NodeId id : ids) hits[id].insert(std::string(strategy));
  };
  collect(matter.get(), kStrategyMatterType);
  collect(statute.get(), kStrategyStatuteSection);
  collect(issue.get(), kStrategyIssueKeyword);

  CaseSet seeds;
  for (const auto& [id, s] : hits) seeds.insert(id);
  collect(by_citation_chain(graph, seeds), kStrategyCitationChain);

  std::vector<Candidate> candidates;
  for (const auto& [id, strategies] : hits) {
    Candidate c = make_candidate(graph.node(id));
    c.strategies = strategies;
    candidates.push_back(std::move(c));
  }
  RetrievalResult result;
  result.candidates = rank(std::move(candidates));
  if (result.candidates.size() > limit) result.candidates.resize(limit);

  std::vector<std::string> citations;
  for (const Candidate& c : result.candidates) citations.push_back(c.citation);
  result.candidate_conflicts = check_conflicts(graph, citations);
  return result;
}

json to_json(const Candidate& c) {
  json j{{"citation", c.citation},
         {"name", c.name},
         {"court", c.court},
         {"year", nullptr},
         {"summary", c.summary},
         {"authority_rank", c.authority_rank},
         {"strategies", c.strategies}};
  if (c.year) j["year"] = *c.year;
  return j;
}

json to_json(const RetrievalResult& result) {
  json candidates = json::array();
  for (const Candidate& c : result.candidates) candidates.push_back(to_json(c));
  json conflicts = json::array();
  for (const ConflictRecord& c : result.candidate_conflicts) conflicts.push_back(to_json(c));
  return json{{"candidates", std::move(candidates)},
              {"candidate_conflicts", std::move(conflicts)}};
}

}  // namespace irac

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

#include "irac/verifier.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "irac/citation.hpp"
#include "irac/errors.hpp"
#include "irac/references.hpp"
#include "irac/text.hpp"

namespace irac {
namespace {

using json = nlohmann::json;

constexpr std::array<std::string_view, 4> kStatusNames = {"VALID", "INVALID",
                                                          "CONFLICT", "STALE"};

const Node* find_case(const LegalGraph& graph, std::string_view citation) {
  return graph.find_node_folded(NodeLabel::kCase, citation);
}

bool is_stub(const Node& node) { return node.boolean("stub").value_or(false); }

std::string case_citation(const Node& node) {
  if (const std::string* c = node.text("citation")) return *c;
  return node.key;
}

// Section or Statute node addressed by `ref`.
const Node* resolve_provision(const LegalGraph& graph, std::string_view ref) {
  if (const Node* n = graph.find_node_folded(NodeLabel::kSection, ref)) return n;
  if (const Node* n = graph.find_node_folded(NodeLabel::kStatute, ref)) return n;
  std::string text(ref);
  auto mentions = scan_section_mentions(text);
  if (mentions.empty()) mentions = scan_section_mentions("section " + text);
  if (mentions.size() != 1) return nullptr;
  if (auto key = resolve_section(graph, mentions.front())) {
    return graph.get_node(NodeLabel::kSection, *key);
  }
  return nullptr;
}

bool provision_repealed(const LegalGraph& graph, const Node& node) {
  if (node.boolean("repealed").value_or(false)) return true;
  if (node.label == NodeLabel::kSection) {
    if (const std::string* statute = node.text("statute_name")) {
      if (const Node* s = graph.get_node(NodeLabel::kStatute, *statute)) {
        return s->boolean("repealed").value_or(false);
      }
    }
  }
  return false;
}

bool rule_matches(const Node& rule, std::string_view claimed) {
  if (fold_case(rule.key) == fold_case(trim(claimed))) return true;
  auto wanted = content_tokens(claimed);
  if (wanted.empty()) return false;
  const std::string* text = rule.text("text");
  if (text == nullptr) return false;
  auto have = content_tokens(*text);
  return std::includes(have.begin(), have.end(), wanted.begin(), wanted.end());
}

std::string hop(const LegalGraph& graph, EdgeType type, NodeId dst) {
  return " -" + std::string(to_string(type)) + "-> " + describe(graph.node(dst));
}

void add_unique(std::vector<std::string>& list, std::string value) {
  if (std::find(list.begin(), list.end(), value) == list.end()) {
    list.push_back(std::move(value));
  }
}

}  // namespace

std::string_view to_string(Status status) {
  return kStatusNames[static_cast<std::size_t>(status)];
}

std::optional<Status> parse_status(std::string_view name) {
  for (std::size_t i = 0; i < kStatusNames.size(); ++i) {
    if (kStatusNames[i] == name) return static_cast<Status>(i);
  }
  return std::nullopt;
}

Claim normalize_claim(Claim claim) {
  std::vector<Citation> citations;
  for (const std::string& raw : claim.cited_cases) {
    if (trim(raw).empty()) continue;
    citations.push_back(Citation::parse(raw));
  }
  claim.cited_cases.clear();
  for (const Citation& c : dedup_citations(citations)) {
    claim.cited_cases.push_back(c.str());
  }
  std::vector<std::string> sections;
  std::set<std::string> seen;
  for (const std::string& raw : claim.cited_sections) {
    std::string s = collapse_whitespace(raw);
    if (!s.empty() && seen.insert(fold_case(s)).second) sections.push_back(std::move(s));
  }
  claim.cited_sections = std::move(sections);
  if (claim.claimed_rule && trim(*claim.claimed_rule).empty()) claim.claimed_rule.reset();
  return claim;
}

CitationCheck check_citation_exists(const LegalGraph& graph, std::string_view citation) {
  CitationCheck check;
  if (const Node* n = find_case(graph, citation)) {
    check.exists = true;
    check.stub = is_stub(*n);
    check.id = n->id;
  }
  return check;
}

std::vector<std::string> check_overruled(const LegalGraph& graph,
                                         std::string_view citation) {
  const Node* n = find_case(graph, citation);
  if (n == nullptr) throw UnknownCitation("citation not in graph: " + std::string(citation));
  std::vector<const Node*> overrulers;
  for (const Adjacent& a : graph.neighbors(n->id, EdgeType::kOverrules, Direction::kIn)) {
    overrulers.push_back(&graph.node(a.node));
  }
  std::sort(overrulers.begin(), overrulers.end(), [](const Node* a, const Node* b) {
    auto ya = a->integer("year").value_or(0);
    auto yb = b->integer("year").value_or(0);
    if (ya != yb) return ya < yb;
    return a->key < b->key;
  });
  std::vector<std::string> out;
  for (const Node* o : overrulers) out.push_back(case_citation(*o));
  return out;
}

std::vector<ConflictRecord> check_conflicts(const LegalGraph& graph,
                                            std::span<const std::string> citations) {
  std::set<NodeId> members;
  for (const std::string& c : citations) {
    if (const Node* n = find_case(graph, c)) members.insert(n->id);
  }
  auto resolution_of = [&](NodeId id) -> std::optional<std::string> {
    for (const Adjacent& a : graph.neighbors(id, EdgeType::kResolvedBy, Direction::kOut)) {
      const std::string* t = graph.edge(a.edge).text("resolution_type");
      return t ? *t : std::string("unspecified");
    }
    return std::nullopt;
  };
  std::vector<ConflictRecord> out;
  for (EdgeId eid : graph.edges_of_type(EdgeType::kConflictsWith)) {
    const Edge& e = graph.edge(eid);
    if (e.src == e.dst || !members.contains(e.src) || !members.contains(e.dst)) continue;
    ConflictRecord r;
    r.case_a = case_citation(graph.node(e.src));
    r.case_b = case_citation(graph.node(e.dst));
    const std::string* type = e.text("conflict_type");
    r.conflict_type = type ? *type : "unspecified";
    r.resolution_type = resolution_of(e.src);
    if (!r.resolution_type) r.resolution_type = resolution_of(e.dst);
    r.unresolved = !r.resolution_type.has_value();
    out.push_back(std::move(r));
  }
  return out;
}

FreshnessCheck check_statute_freshness(const LegalGraph& graph,
                                       std::span<const std::string> sections) {
  FreshnessCheck out;
  for (const std::string& ref : sections) {
    const Node* n = resolve_provision(graph, ref);
    if (n == nullptr) {
      add_unique(out.unknown, ref);
    } else if (provision_repealed(graph, *n)) {
      add_unique(out.stale, n->key);
    }
  }
  return out;
}

std::optional<std::string> find_support_path(const Claim& claim,
                                             std::string_view citation,
                                             const LegalGraph& graph) {
  const Node* c = find_case(graph, citation);
  if (c == nullptr) return std::nullopt;
  std::string base = describe(*c);
  if (is_stub(*c)) {
    if (claim.claimed_rule) return std::nullopt;
    return base;
  }
  std::vector<std::string> parts;
  if (claim.claimed_rule) {
    std::optional<Adjacent> witness;
    for (const Adjacent& a : graph.neighbors(c->id, EdgeType::kAppliesRule, Direction::kOut)) {
      if (rule_matches(graph.node(a.node), *claim.claimed_rule)) {
        witness = a;
        break;
      }
    }
    if (!witness) return std::nullopt;
    parts.push_back(base + hop(graph, EdgeType::kAppliesRule, witness->node));
  }
  for (const std::string& ref : claim.cited_sections) {
    const Node* s = resolve_provision(graph, ref);
    if (s == nullptr) continue;
    for (EdgeType t : {EdgeType::kGovernedBy, EdgeType::kCites}) {
      if (graph.find_edge(t, c->id, s->id)) {
        parts.push_back(base + hop(graph, t, s->id));
        break;
      }
    }
  }
  if (parts.empty()) return base;
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

bool transition_witnessed(const LegalGraph& graph, const ProceduralClaim& step) {
  for (EdgeId eid : graph.edges_of_type(EdgeType::kTriggers)) {
    const Edge& e = graph.edge(eid);
    const std::string* from = graph.node(e.src).text("event_type");
    const std::string* to = graph.node(e.dst).text("event_type");
    if (from && to && *from == step.current_event_type && *to == step.next_event_type) {
      return true;
    }
  }
  return false;
}

bool VerificationReport::has_unresolved_conflict() const {
  return std::any_of(conflicts.begin(), conflicts.end(),
                     [](const ConflictRecord& c) { return c.unresolved; });
}

bool VerificationReport::path_valid() const {
  return !(grounded.empty() && missing.empty()) && missing.empty() &&
         overruled.empty() && unsupported.empty();
}

std::string_view confidence_label(double confidence) {
  if (confidence >= 0.8) return "high";
  if (confidence >= 0.5) return "medium";
  return "low";
}

VerificationReport verify(const Claim& raw_claim, const LegalGraph& graph) {
  VerificationReport r;
  Claim claim;
  try {
    claim = normalize_claim(raw_claim);
  } catch (const Error&) {
    claim = raw_claim;
  }
  std::vector<std::string> notes;

  std::size_t live = 0;
  for (const std::string& c : claim.cited_cases) {
    CitationCheck check = check_citation_exists(graph, c);
    if (!check.exists) {
      r.missing.push_back(c);
      continue;
    }
    r.grounded.push_back(c);
    if (check.stub) r.stubs.push_back(c);
    auto overrulers = check_overruled(graph, c);
    for (const std::string& by : overrulers) r.overruled.push_back({c, by});
    if (overrulers.empty()) ++live;
    if (auto path = find_support_path(claim, c, graph)) {
      if (overrulers.empty()) r.support_paths.push_back(std::move(*path));
    } else {
      r.unsupported.push_back(c);
    }
  }
  r.conflicts = check_conflicts(graph, r.grounded);
  FreshnessCheck fresh = check_statute_freshness(graph, claim.cited_sections);
  r.stale_sections = std::move(fresh.stale);
  r.unknown_sections = std::move(fresh.unknown);
  if (claim.procedural_claim) {
    r.procedural_unwitnessed = !transition_witnessed(graph, *claim.procedural_claim);
  }

  r.confidence = claim.cited_cases.empty()
                     ? 0.0
                     : static_cast<double>(live) /
                           static_cast<double>(claim.cited_cases.size());

  if (claim.cited_cases.empty()) notes.emplace_back(kNoCitationsReason);
  if (!r.missing.empty()) notes.emplace_back(kHallucinationNote);
  for (const OverruledCitation& o : r.overruled) {
    notes.push_back("Overruled precedent cited: " + o.citation + " (overruled by " +
                    o.overruled_by + ").");
  }
  for (const std::string& c : r.unsupported) {
    notes.push_back("No support path for the claimed rule via " + c + ".");
  }
  if (r.procedural_unwitnessed) {
    notes.push_back("No TRIGGERS transition from " +
                    claim.procedural_claim->current_event_type + " to " +
                    claim.procedural_claim->next_event_type + ".");
  }
  for (const std::string& s : r.stale_sections) {
    notes.push_back("Repealed provision cited: " + s + ".");
  }
  for (const std::string& s : r.unknown_sections) {
    notes.push_back("Warning: provision not found in graph: " + s + ".");
  }
  for (const ConflictRecord& c : r.conflicts) {
    if (c.unresolved) {
      notes.push_back("Unresolved " + c.conflict_type + " conflict between " + c.case_a +
                      " and " + c.case_b + ".");
    } else {
      notes.push_back("Conflict between " + c.case_a + " and " + c.case_b +
                      " resolved by " + *c.resolution_type + ".");
    }
  }
  if (!r.stubs.empty()) {
    std::string list;
    for (const std::string& s : r.stubs) list += (list.empty() ? "" : ", ") + s;
    notes.push_back("Grounded only as cited references: " + list + ".");
  }

  bool invalid = claim.cited_cases.empty() || !r.missing.empty() ||
                 !r.overruled.empty() || !r.unsupported.empty() ||
                 r.procedural_unwitnessed;
  if (invalid) {
    r.status = Status::kInvalid;
  } else if (!r.stale_sections.empty()) {
    r.status = Status::kStale;
  } else if (r.has_unresolved_conflict()) {
    r.status = Status::kConflict;
  } else {
    r.status = Status::kValid;
  }
  r.confidence_label = r.status == Status::kConflict
                           ? "low"
                           : std::string(confidence_label(r.confidence));
  if (notes.empty()) notes.emplace_back("All citations grounded.");
  std::ostringstream joined;
  for (std::size_t i = 0; i < notes.size(); ++i) joined << (i ? " " : "") << notes[i];
  r.note = joined.str();
  return r;
}

json to_json(const ConflictRecord& record) {
  json j{{"case_a", record.case_a},
         {"case_b", record.case_b},
         {"conflict_type", record.conflict_type},
         {"unresolved", record.unresolved},
         {"resolution_type", nullptr}};
  if (record.resolution_type) j["resolution_type"] = *record.resolution_type;
  return j;
}

json to_json(const VerificationReport& report) {
  json overruled = json::array();
  for (const OverruledCitation& o : report.overruled) {
    overruled.push_back({{"citation", o.citation}, {"overruled_by", o.overruled_by}});
  }
  json conflicts = json::array();
  for (const ConflictRecord& c : report.conflicts) conflicts.push_back(to_json(c));
  return json{{"status", to_string(report.status)},
              {"confidence", report.confidence},
              {"confidence_label", report.confidence_label},
              {"grounded", report.grounded},
              {"missing", report.missing},
              {"overruled", std::move(overruled)},
              {"conflicts", std::move(conflicts)},
              {"stale_sections", report.stale_sections},
              {"support_paths", report.support_paths},
              {"note", report.note}};
}

}  // namespace irac

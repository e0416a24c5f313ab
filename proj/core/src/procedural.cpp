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

#include "irac/procedural.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "irac/errors.hpp"
#include "irac/text.hpp"

namespace irac {
namespace {

using json = nlohmann::json;

constexpr EdgeTypeSet kTransitionTypes{EdgeType::kTriggers, EdgeType::kPrecedes,
                                       EdgeType::kResultsIn};

const std::string* event_type_of(const Node& n) {
  return n.label == NodeLabel::kProceduralEvent ? n.text("event_type") : nullptr;
}

struct Transitions {
  std::set<std::pair<std::string, std::string>> linked;
  std::map<std::pair<std::string, std::string>, std::set<std::int64_t>> gaps;
};

Transitions collect_transitions(const LegalGraph& graph) {
  Transitions t;
  for (const Edge& e : graph.edges()) {
    if (!kTransitionTypes.contains(e.type)) continue;
    const std::string* from = event_type_of(graph.node(e.src));
    const std::string* to = event_type_of(graph.node(e.dst));
    if (from == nullptr || to == nullptr) continue;
    auto key = std::make_pair(*from, *to);
    t.linked.insert(key);
    if (e.type == EdgeType::kPrecedes) {
      if (auto gap = e.integer("time_gap_days")) t.gaps[key].insert(*gap);
    }
  }
  return t;
}

bool token_phrase_in(const std::vector<std::string>& haystack,
                     const std::vector<std::string>& needle) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) !=
         haystack.end();
}

bool any_token(const std::set<std::string>& tokens,
               std::initializer_list<std::string_view> words) {
  return std::any_of(words.begin(), words.end(), [&](std::string_view w) {
    return tokens.contains(std::string(w));
  });
}

bool optional_less(const std::optional<std::string>& a,
                   const std::optional<std::string>& b) {
  if (a.has_value() != b.has_value()) return !a.has_value();
  return a.has_value() && *a < *b;
}

}  // namespace

std::vector<ProceduralStep> next_steps(const LegalGraph& graph,
                                       std::string_view current_event_type) {
  std::vector<ProceduralStep> out;
  for (EdgeId eid : graph.edges_of_type(EdgeType::kTriggers)) {
    const Edge& e = graph.edge(eid);
    const std::string* from = event_type_of(graph.node(e.src));
    if (from == nullptr || *from != current_event_type) continue;
    const Node& dst = graph.node(e.dst);
    const std::string* to = event_type_of(dst);
    if (to == nullptr) continue;
    ProceduralStep step{*to, std::nullopt, std::nullopt};
    if (const std::string* level = dst.text("court_level")) step.court_level = *level;
    if (const std::string* cond = e.text("condition")) step.condition = *cond;
    if (std::find(out.begin(), out.end(), step) == out.end()) out.push_back(std::move(step));
  }
  std::sort(out.begin(), out.end(), [](const ProceduralStep& a, const ProceduralStep& b) {
    if (a.event_type != b.event_type) return a.event_type < b.event_type;
    if (a.condition != b.condition) return optional_less(a.condition, b.condition);
    return optional_less(a.court_level, b.court_level);
  });
  return out;
}

SequenceValidation validate_sequence(const EventSequence& sequence,
                                     const LegalGraph& graph) {
  SequenceValidation v;
  Transitions t = collect_transitions(graph);
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
    const SequenceEvent& a = sequence[i];
    const SequenceEvent& b = sequence[i + 1];
    std::string pair = a.event_type + " -> " + b.event_type;
    if (b.order <= a.order) {
      v.violations.push_back("order: " + pair + " is not strictly increasing");
    }
    std::optional<long> gap;
    if (a.date && b.date) {
      auto da = parse_iso_date(*a.date);
      auto db = parse_iso_date(*b.date);
      if (!da || !db) {
        v.violations.push_back("date: unparseable date in " + pair);
      } else {
        gap = days_between(*da, *db);
        if (*gap < 0) {
          v.violations.push_back("temporal: " + pair + " goes back in time (" + *a.date +
                                 " to " + *b.date + ")");
        }
      }
    }
    auto key = std::make_pair(a.event_type, b.event_type);
    if (!t.linked.contains(key)) {
      if (t.linked.contains({b.event_type, a.event_type})) {
        v.violations.push_back("transition: graph links only " + b.event_type + " -> " +
                               a.event_type);
      } else {
        v.warnings.push_back("transition: no edge between " + pair + " in graph");
      }
    }
    if (gap && *gap >= 0) {
      if (auto it = t.gaps.find(key); it != t.gaps.end() && !it->second.contains(*gap)) {
        v.violations.push_back("gap: " + pair + " is " + std::to_string(*gap) +
                               " days, graph records " +
                               std::to_string(*it->second.begin()));
      }
    }
  }
  v.valid = v.violations.empty();
  return v;
}

std::optional<std::string> procedural_next_step(const LegalGraph& graph,
                                                std::string_view current_event_type) {
  auto steps = next_steps(graph, current_event_type);
  if (steps.empty()) return std::nullopt;
  return steps.front().event_type;
}

std::optional<std::string> infer_procedural_state(std::string_view text,
                                                  const LegalGraph& graph) {
  std::vector<std::string> tokens = tokenize(text);
  std::optional<std::string> best;
  std::size_t best_len = 0;
  std::set<std::string> types;
  for (NodeId id : graph.nodes_with_label(NodeLabel::kProceduralEvent)) {
    if (const std::string* t = graph.node(id).text("event_type")) types.insert(*t);
  }
  for (const std::string& type : types) {
    std::vector<std::string> words = tokenize(type);
    if (words.size() > best_len && token_phrase_in(tokens, words)) {
      best = type;
      best_len = words.size();
    }
  }
  if (best) return best;

  std::set<std::string> words(tokens.begin(), tokens.end());
  bool refused = any_token(words, {"rejected", "denied", "refused", "dismissed", "rejection"});
  if (words.contains("bail")) {
    if (words.contains("anticipatory") && refused) return "ANTICIPATORY_BAIL_DENIED";
    if (refused) return "BAIL_DENIED";
    if (any_token(words, {"granted", "released"})) return "BAIL_GRANTED";
  }
  if (any_token(words, {"convicted", "conviction"})) return "CONVICTION";
  if (any_token(words, {"terminated", "termination"})) return "TERMINATION";
  return std::nullopt;
}

EventSequence case_event_sequence(const LegalGraph& graph, std::string_view citation) {
  const Node* c = graph.find_node_folded(NodeLabel::kCase, citation);
  if (c == nullptr) throw UnknownCitation("citation not in graph: " + std::string(citation));
  EventSequence out;
  for (NodeId id : graph.nodes_with_label(NodeLabel::kProceduralEvent)) {
    const Node& n = graph.node(id);
    const std::string* owner = n.text("case_citation");
    if (owner == nullptr || *owner != c->key) continue;
    SequenceEvent e;
    e.event_type = n.text("event_type") ? *n.text("event_type") : "";
    if (const std::string* d = n.text("date")) e.date = *d;
    e.order = n.integer("sequence").value_or(0);
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(),
            [](const SequenceEvent& a, const SequenceEvent& b) { return a.order < b.order; });
  return out;
}

json to_json(const ProceduralStep& step) {
  return json{{"event_type", step.event_type},
              {"court_level", step.court_level ? json(*step.court_level) : json()},
              {"condition", step.condition ? json(*step.condition) : json()}};
}

json to_json(const SequenceValidation& v) {
  return json{{"valid", v.valid}, {"violations", v.violations}, {"warnings", v.warnings}};
}

json to_json(const EventSequence& sequence) {
  json out = json::array();
  for (const SequenceEvent& e : sequence) {
    json j{{"event_type", e.event_type}, {"order", e.order}};
    if (e.date) j["date"] = *e.date;
    out.push_back(std::move(j));
  }
  return out;
}

EventSequence event_sequence_from_json(const json& j) {
  if (!j.is_array()) throw MalformedRecord("procedural_sequence", "expected a list");
  EventSequence out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string path = "procedural_sequence[" + std::to_string(i) + "]";
    const json& e = j[i];
    if (!e.is_object() || !e.contains("event_type") || !e["event_type"].is_string()) {
      throw MalformedRecord(path + ".event_type", "required field is missing");
    }
    SequenceEvent ev;
    ev.event_type = e["event_type"].get<std::string>();
    if (auto it = e.find("order"); it != e.end() && it->is_number_integer()) {
      ev.order = it->get<std::int64_t>();
    } else {
      ev.order = static_cast<std::int64_t>(i + 1);
    }
    if (auto it = e.find("date"); it != e.end() && it->is_string()) {
      ev.date = it->get<std::string>();
    }
    out.push_back(std::move(ev));
  }
  return out;
}

}  // namespace irac

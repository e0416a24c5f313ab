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

#include "irac/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "irac/citation.hpp"
#include "irac/errors.hpp"
#include "irac/references.hpp"
#include "irac/snapshot.hpp"
#include "irac/text.hpp"

namespace irac {
namespace {

using json = nlohmann::json;

constexpr EdgeTypeSet kPrecedentRelations{
    EdgeType::kCites,         EdgeType::kOverrules,  EdgeType::kDistinguishes,
    EdgeType::kConflictsWith, EdgeType::kResolvedBy, EdgeType::kNarrowedBy,
};

std::string join(std::string_view prefix, std::string_view field) {
  if (prefix.empty()) return std::string(field);
  return std::string(prefix) + "." + std::string(field);
}

std::string index(std::string_view path, std::size_t i) {
  return std::string(path) + "[" + std::to_string(i) + "]";
}

class Reader {
 public:
  explicit Reader(std::vector<std::string>& warnings) : warnings_(warnings) {}

  const json& object(const json& j, const std::string& path,
                     std::initializer_list<std::string_view> known) {
    if (!j.is_object()) throw MalformedRecord(path.empty() ? "record" : path,
                                              "expected an object");
    for (const auto& [name, value] : j.items()) {
      if (std::find(known.begin(), known.end(), name) == known.end()) {
        warnings_.push_back("ignored unknown field '" + join(path, name) + "'");
      }
    }
    return j;
  }

  static const json* field(const json& j, std::string_view name) {
    auto it = j.find(name);
    if (it == j.end() || it->is_null()) return nullptr;
    return &*it;
  }

  static std::optional<std::string> text(const json& j, std::string_view name,
                                         const std::string& path) {
    const json* v = field(j, name);
    if (v == nullptr) return std::nullopt;
    if (!v->is_string()) throw MalformedRecord(join(path, name), "expected text");
    return v->get<std::string>();
  }

  static std::string required_text(const json& j, std::string_view name,
                                   const std::string& path) {
    auto v = text(j, name, path);
    if (!v || trim(*v).empty()) {
      throw MalformedRecord(join(path, name), "required field is missing");
    }
    return *v;
  }

  static std::optional<std::int64_t> integer(const json& j, std::string_view name,
                                             const std::string& path) {
    const json* v = field(j, name);
    if (v == nullptr) return std::nullopt;
    if (!v->is_number_integer()) {
      throw MalformedRecord(join(path, name), "expected an integer");
    }
    return v->get<std::int64_t>();
  }

  static bool boolean(const json& j, std::string_view name, const std::string& path) {
    const json* v = field(j, name);
    if (v == nullptr) return false;
    if (!v->is_boolean()) throw MalformedRecord(join(path, name), "expected a boolean");
    return v->get<bool>();
  }

  static const json* array(const json& j, std::string_view name,
                           const std::string& path) {
    const json* v = field(j, name);
    if (v == nullptr) return nullptr;
    if (!v->is_array()) throw MalformedRecord(join(path, name), "expected a list");
    return v;
  }

 private:
  std::vector<std::string>& warnings_;
};

std::string citation_field(const json& j, std::string_view name,
                           const std::string& path) {
  std::string raw = Reader::required_text(j, name, path);
  try {
    return normalize_citation(raw);
  } catch (const EmptyCitation&) {
    throw MalformedRecord(join(path, name), "citation is empty");
  }
}

PrecedentEntry parse_precedent(Reader& r, const json& j, const std::string& path) {
  r.object(j, path, {"citation", "relation", "attributes"});
  PrecedentEntry p;
  p.citation = citation_field(j, "citation", path);
  std::string relation = Reader::required_text(j, "relation", path);
  auto type = parse_edge_type(relation);
  if (!type || !kPrecedentRelations.contains(*type)) {
    throw MalformedRecord(join(path, "relation"),
                          "unknown precedent relation '" + relation + "'");
  }
  p.relation = *type;
  if (const json* attrs = Reader::field(j, "attributes")) {
    if (!attrs->is_object()) {
      throw MalformedRecord(join(path, "attributes"), "expected an object");
    }
    for (const auto& [name, value] : attrs->items()) {
      if (value.is_null()) continue;
      try {
        p.attributes.emplace(name, property_from_json(value));
      } catch (const SchemaViolation& e) {
        throw MalformedRecord(join(join(path, "attributes"), name), e.what());
      }
    }
    try {
      validate_edge_properties(p.relation, p.attributes);
    } catch (const SchemaViolation& e) {
      throw MalformedRecord(join(path, "attributes"), e.what());
    }
  }
  return p;
}

ProceduralEventEntry parse_event(Reader& r, const json& j, const std::string& path) {
  r.object(j, path, {"event_type", "order", "date", "court_level", "triggers_next",
                     "results_in_next"});
  ProceduralEventEntry e;
  e.event_type = Reader::required_text(j, "event_type", path);
  auto order = Reader::integer(j, "order", path);
  if (!order) throw MalformedRecord(join(path, "order"), "required field is missing");
  e.order = *order;
  if (auto date = Reader::text(j, "date", path)) {
    auto parsed = parse_iso_date(*date);
    if (!parsed) {
      throw MalformedRecord(join(path, "date"), "expected an ISO date, got '" + *date + "'");
    }
    e.date = format_iso_date(*parsed);
  }
  e.court_level = Reader::text(j, "court_level", path);
  if (const json* t = Reader::field(j, "triggers_next")) {
    std::string tpath = join(path, "triggers_next");
    if (t->is_boolean()) {
      if (t->get<bool>()) e.triggers_next = TriggerSpec{};
    } else {
      r.object(*t, tpath, {"condition"});
      e.triggers_next = TriggerSpec{Reader::text(*t, "condition", tpath)};
    }
  }
  e.results_in_next = Reader::boolean(j, "results_in_next", path);
  return e;
}

StatuteEntry parse_statute(Reader& r, const json& j, const std::string& path) {
  r.object(j, path, {"name", "title", "repealed", "sections"});
  StatuteEntry s;
  s.name = trim(Reader::required_text(j, "name", path));
  s.title = Reader::text(j, "title", path);
  s.repealed = Reader::boolean(j, "repealed", path);
  if (const json* sections = Reader::array(j, "sections", path)) {
    for (std::size_t i = 0; i < sections->size(); ++i) {
      std::string spath = index(join(path, "sections"), i);
      const json& sj = (*sections)[i];
      r.object(sj, spath, {"number", "repealed"});
      SectionEntry sec;
      const json* number = Reader::field(sj, "number");
      if (number != nullptr && number->is_number_integer()) {
        sec.number = std::to_string(number->get<std::int64_t>());
      } else {
        sec.number = trim(Reader::required_text(sj, "number", spath));
      }
      sec.repealed = Reader::boolean(sj, "repealed", spath);
      s.sections.push_back(std::move(sec));
    }
  }
  return s;
}

std::optional<NodeId> find_case(const LegalGraph& graph, std::string_view citation) {
  if (const Node* n = graph.find_node_folded(NodeLabel::kCase, citation)) return n->id;
  return std::nullopt;
}

class Loader {
 public:
  Loader(LegalGraph& graph, LoadReport& report) : graph_(graph), report_(report) {}

  void remember_spelling(const std::string& citation) {
    spelling_.emplace(fold_case(citation), citation);
  }

  void load(const JudgmentRecord& rec) {
    std::string key = rec.citation;
    if (auto existing = find_case(graph_, key)) key = graph_.node(*existing).key;
    PropertyMap props{{"citation", key},
                      {"name", rec.name},
                      {"court", rec.court},
                      {"matter_type", rec.matter_type},
                      {"summary", rec.summary},
                      {"stub", false}};
    if (rec.year) props.emplace("year", *rec.year);
    if (rec.bench_size) props.emplace("bench_size", *rec.bench_size);
    if (rec.bench_type) props.emplace("bench_type", *rec.bench_type);
    NodeId self = node(NodeLabel::kCase, key, props);

    auto scoped = [&](std::string_view kind, std::size_t ordinal) {
      return key + "#" + std::string(kind) + "#" + std::to_string(ordinal);
    };

    for (std::size_t i = 0; i < rec.issues.size(); ++i) {
      PropertyMap p{{"text", rec.issues[i].text}, {"case_citation", key}};
      if (!rec.issues[i].category.empty()) p.emplace("category", rec.issues[i].category);
      NodeId issue = node(NodeLabel::kLegalIssue, scoped("issue", i + 1), p);
      edge(EdgeType::kAddresses, self, issue);
    }
    for (std::size_t i = 0; i < rec.rules.size(); ++i) {
      NodeId rule = node(NodeLabel::kRule, scoped("rule", i + 1),
                         {{"text", rec.rules[i].text}, {"case_citation", key}});
      edge(EdgeType::kAppliesRule, self, rule);
    }
    for (const StatuteEntry& s : rec.statutes) {
      PropertyMap sp{{"name", s.name}, {"repealed", s.repealed}};
      if (s.title) sp.emplace("title", *s.title);
      NodeId statute = node(NodeLabel::kStatute, s.name, sp);
      if (s.sections.empty()) edge(EdgeType::kGovernedBy, self, statute);
      for (const SectionEntry& sec : s.sections) {
        NodeId section = node(NodeLabel::kSection, section_key(s.name, sec.number),
                              {{"number", sec.number},
                               {"statute_name", s.name},
                               {"repealed", sec.repealed || s.repealed}});
        edge(EdgeType::kGovernedBy, self, section);
      }
    }
    for (const PrecedentEntry& p : rec.precedents) {
      if (same_citation(p.citation, key)) {
        report_.warnings.push_back(rec.citation + ": ignored self-referencing " +
                                   std::string(to_string(p.relation)));
        continue;
      }
      NodeId target;
      if (auto existing = find_case(graph_, p.citation)) {
        target = *existing;
      } else {
        auto it = spelling_.find(fold_case(p.citation));
        const std::string& k = it == spelling_.end() ? p.citation : it->second;
        target = node(NodeLabel::kCase, k, {{"citation", k}, {"stub", true}});
      }
      PropertyMap attrs = p.attributes;
      if (p.relation == EdgeType::kOverrules && rec.year && !attrs.contains("year")) {
        attrs.emplace("year", *rec.year);
      }
      edge(p.relation, self, target, attrs);
    }
    std::vector<NodeId> events;
    for (const ProceduralEventEntry& e : rec.procedural_events) {
      PropertyMap p{{"event_type", e.event_type},
                    {"sequence", e.order},
                    {"case_citation", key}};
      if (e.date) p.emplace("date", *e.date);
      if (e.court_level) p.emplace("court_level", *e.court_level);
      events.push_back(
          node(NodeLabel::kProceduralEvent, scoped("event", static_cast<std::size_t>(e.order)), p));
    }
    for (std::size_t i = 0; i + 1 < events.size(); ++i) {
      const ProceduralEventEntry& a = rec.procedural_events[i];
      const ProceduralEventEntry& b = rec.procedural_events[i + 1];
      PropertyMap gap;
      if (a.date && b.date) {
        long days = days_between(*parse_iso_date(*a.date), *parse_iso_date(*b.date));
        if (days >= 0) {
          gap.emplace("time_gap_days", static_cast<std::int64_t>(days));
        } else {
          report_.warnings.push_back(rec.citation + ": event " + std::to_string(b.order) +
                                     " is dated before event " + std::to_string(a.order));
        }
      }
      edge(EdgeType::kPrecedes, events[i], events[i + 1], gap);
      if (a.triggers_next) {
        PropertyMap cond;
        if (a.triggers_next->condition) cond.emplace("condition", *a.triggers_next->condition);
        edge(EdgeType::kTriggers, events[i], events[i + 1], cond);
      }
      if (a.results_in_next) edge(EdgeType::kResultsIn, events[i], events[i + 1]);
    }
    if (!rec.procedural_events.empty()) {
      const ProceduralEventEntry& last = rec.procedural_events.back();
      if (last.triggers_next || last.results_in_next) {
        report_.warnings.push_back(rec.citation +
                                   ": last procedural event has no successor to link");
      }
    }
    if (rec.outcome) {
      NodeId outcome = node(NodeLabel::kOutcome, scoped("outcome", 1),
                            {{"outcome_type", rec.outcome->outcome_type},
                             {"text", rec.outcome->text},
                             {"case_citation", key}});
      edge(EdgeType::kResultsIn, self, outcome);
    }
    ++report_.cases_loaded;
  }

 private:
  NodeId node(NodeLabel label, const std::string& key, const PropertyMap& props) {
    ++report_.nodes_merged;
    return graph_.merge_node(label, key, props);
  }

  void edge(EdgeType type, NodeId src, NodeId dst, const PropertyMap& props = {}) {
    ++report_.edges_merged;
    graph_.merge_edge(type, src, dst, props);
  }

  LegalGraph& graph_;
  LoadReport& report_;
  std::map<std::string, std::string> spelling_;
};

}  // namespace

ParsedRecord parse_record(const json& document) {
  ParsedRecord out;
  Reader r(out.warnings);
  const std::string root;
  r.object(document, root,
           {"citation", "name", "court", "year", "bench_size", "bench_type",
            "matter_type", "summary", "issues", "rules", "statutes", "precedents",
            "procedural_events", "outcome"});
  JudgmentRecord& rec = out.record;
  rec.citation = citation_field(document, "citation", root);
  rec.name = Reader::text(document, "name", root).value_or("");
  rec.court = Reader::text(document, "court", root).value_or("");
  rec.year = Reader::integer(document, "year", root);
  if (rec.year && (*rec.year < 1800 || *rec.year > 2100)) {
    throw MalformedRecord("year", "must be within [1800, 2100], got " +
                                      std::to_string(*rec.year));
  }
  rec.bench_size = Reader::integer(document, "bench_size", root);
  if (rec.bench_size && *rec.bench_size < 1) {
    throw MalformedRecord("bench_size", "must be positive");
  }
  rec.bench_type = Reader::text(document, "bench_type", root);
  rec.matter_type = Reader::required_text(document, "matter_type", root);
  rec.summary = Reader::text(document, "summary", root).value_or("");

  if (const json* issues = Reader::array(document, "issues", root)) {
    for (std::size_t i = 0; i < issues->size(); ++i) {
      std::string path = index("issues", i);
      r.object((*issues)[i], path, {"text", "category"});
      rec.issues.push_back({Reader::required_text((*issues)[i], "text", path),
                            Reader::text((*issues)[i], "category", path).value_or("")});
    }
  }
  if (const json* rules = Reader::array(document, "rules", root)) {
    for (std::size_t i = 0; i < rules->size(); ++i) {
      std::string path = index("rules", i);
      r.object((*rules)[i], path, {"text"});
      rec.rules.push_back({Reader::required_text((*rules)[i], "text", path)});
    }
  }
  if (const json* statutes = Reader::array(document, "statutes", root)) {
    for (std::size_t i = 0; i < statutes->size(); ++i) {
      rec.statutes.push_back(parse_statute(r, (*statutes)[i], index("statutes", i)));
    }
  }
  if (const json* precedents = Reader::array(document, "precedents", root)) {
    for (std::size_t i = 0; i < precedents->size(); ++i) {
      rec.precedents.push_back(
          parse_precedent(r, (*precedents)[i], index("precedents", i)));
    }
  }
  if (const json* events = Reader::array(document, "procedural_events", root)) {
    for (std::size_t i = 0; i < events->size(); ++i) {
      std::string path = index("procedural_events", i);
      ProceduralEventEntry e = parse_event(r, (*events)[i], path);
      if (!rec.procedural_events.empty() && e.order <= rec.procedural_events.back().order) {
        throw MalformedRecord(join(path, "order"),
                              "procedural events must be strictly ordered");
      }
      rec.procedural_events.push_back(std::move(e));
    }
  }
  if (const json* outcome = Reader::field(document, "outcome")) {
    r.object(*outcome, "outcome", {"outcome_type", "text"});
    rec.outcome = OutcomeEntry{Reader::required_text(*outcome, "outcome_type", "outcome"),
                               Reader::text(*outcome, "text", "outcome").value_or("")};
  }
  return out;
}

ParsedRecord parse_record(std::string_view json_text) {
  json document;
  try {
    document = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw MalformedRecord("record", std::string("invalid JSON: ") + e.what());
  }
  return parse_record(document);
}

std::vector<ParsedRecord> parse_corpus(std::string_view text) {
  std::vector<ParsedRecord> out;
  auto parse_at = [&](const json& doc, std::size_t i) {
    try {
      out.push_back(parse_record(doc));
    } catch (const MalformedRecord& e) {
      std::string path = index("record", i);
      const std::string& inner = e.field_path();
      if (inner != "record") path += inner.starts_with("[") ? inner : "." + inner;
      std::string message = e.what();
      throw MalformedRecord(path, message.substr(inner.size() + 2));
    }
  };
  std::string body = trim(text);
  if (body.empty()) return out;
  json whole = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (!whole.is_discarded()) {
    if (whole.is_array()) {
      for (std::size_t i = 0; i < whole.size(); ++i) parse_at(whole[i], i);
    } else {
      parse_at(whole, 0);
    }
    return out;
  }
  std::istringstream lines(body);
  std::string line;
  std::size_t i = 0;
  while (std::getline(lines, line)) {
    if (trim(line).empty()) continue;
    json doc = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) {
      throw MalformedRecord(index("record", i), "invalid JSON line");
    }
    parse_at(doc, i++);
  }
  return out;
}

std::vector<ParsedRecord> read_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read corpus file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_corpus(buffer.str());
}

json to_json(const JudgmentRecord& rec) {
  json j{{"citation", rec.citation},       {"name", rec.name},
         {"court", rec.court},             {"matter_type", rec.matter_type},
         {"summary", rec.summary},         {"issues", json::array()},
         {"rules", json::array()},         {"statutes", json::array()},
         {"precedents", json::array()},    {"procedural_events", json::array()}};
  if (rec.year) j["year"] = *rec.year;
  if (rec.bench_size) j["bench_size"] = *rec.bench_size;
  if (rec.bench_type) j["bench_type"] = *rec.bench_type;
  for (const IssueEntry& i : rec.issues) {
    j["issues"].push_back({{"text", i.text}, {"category", i.category}});
  }
  for (const RuleEntry& r : rec.rules) j["rules"].push_back({{"text", r.text}});
  for (const StatuteEntry& s : rec.statutes) {
    json sj{{"name", s.name}, {"repealed", s.repealed}, {"sections", json::array()}};
    if (s.title) sj["title"] = *s.title;
    for (const SectionEntry& sec : s.sections) {
      sj["sections"].push_back({{"number", sec.number}, {"repealed", sec.repealed}});
    }
    j["statutes"].push_back(std::move(sj));
  }
  for (const PrecedentEntry& p : rec.precedents) {
    json attrs = json::object();
    for (const auto& [name, value] : p.attributes) attrs[name] = property_to_json(value);
    j["precedents"].push_back({{"citation", p.citation},
                               {"relation", to_string(p.relation)},
                               {"attributes", std::move(attrs)}});
  }
  for (const ProceduralEventEntry& e : rec.procedural_events) {
    json ej{{"event_type", e.event_type}, {"order", e.order}};
    if (e.date) ej["date"] = *e.date;
    if (e.court_level) ej["court_level"] = *e.court_level;
    if (e.triggers_next) {
      ej["triggers_next"] = json::object();
      if (e.triggers_next->condition) {
        ej["triggers_next"]["condition"] = *e.triggers_next->condition;
      }
    }
    if (e.results_in_next) ej["results_in_next"] = true;
    j["procedural_events"].push_back(std::move(ej));
  }
  if (rec.outcome) {
    j["outcome"] = {{"outcome_type", rec.outcome->outcome_type},
                    {"text", rec.outcome->text}};
  }
  return j;
}

LoadReport load(const std::vector<JudgmentRecord>& records, LegalGraph& graph) {
  LoadReport report;
  Loader loader(graph, report);
  for (const JudgmentRecord& rec : records) loader.remember_spelling(rec.citation);
  for (const JudgmentRecord& rec : records) {
    try {
      loader.load(rec);
    } catch (const Error& e) {
      report.warnings.push_back(rec.citation + ": " + e.what());
    }
  }
  return report;
}

json to_json(const LoadReport& report) {
  return json{{"cases_loaded", report.cases_loaded},
              {"nodes_merged", report.nodes_merged},
              {"edges_merged", report.edges_merged},
              {"warnings", report.warnings}};
}

std::map<int, std::size_t> compute_decade_histogram(const LegalGraph& graph) {
  std::map<int, std::size_t> out;
  for (NodeId id : graph.nodes_with_label(NodeLabel::kCase)) {
    const Node& n = graph.node(id);
    if (n.boolean("stub").value_or(false)) continue;
    if (auto year = n.integer("year")) ++out[static_cast<int>(*year / 10 * 10)];
  }
  return out;
}

std::string decade_label(int decade) { return std::to_string(decade) + "s"; }

}  // namespace irac

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

#include "irac/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "irac/citation.hpp"
#include "irac/errors.hpp"
#include "irac/references.hpp"
#include "irac/text.hpp"

namespace irac {
namespace {

using json = nlohmann::json;

bool answered(const EvalRecord& r) { return r.output && !r.output->abstained(); }

bool provision_stale(const LegalGraph& graph, const std::string& key,
                     const std::set<std::string>& truth_repealed) {
  if (truth_repealed.contains(key)) return true;
  const Node* section = graph.get_node(NodeLabel::kSection, key);
  if (section == nullptr) return false;
  if (section->boolean("repealed").value_or(false)) return true;
  if (const std::string* statute = section->text("statute_name")) {
    if (const Node* s = graph.get_node(NodeLabel::kStatute, *statute)) {
      return s->boolean("repealed").value_or(false);
    }
  }
  return false;
}

std::set<std::string> string_set(const json& j, const std::string& path) {
  std::set<std::string> out;
  if (j.is_null()) return out;
  if (!j.is_array()) throw MalformedRecord(path, "expected a list");
  for (const json& v : j) {
    if (!v.is_string()) throw MalformedRecord(path, "expected text");
    out.insert(v.get<std::string>());
  }
  return out;
}

}  // namespace

Metric Metric::ratio(std::string name, std::size_t numerator, std::size_t denominator) {
  Metric m{std::move(name), numerator, denominator, std::nullopt};
  if (denominator > 0) {
    m.value = static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  return m;
}

const Metric* MetricReport::find(std::string_view name) const {
  for (const Metric& m : metrics) {
    if (m.name == name) return &m;
  }
  if (completion_rate.name == name) return &completion_rate;
  if (abstention_rate.name == name) return &abstention_rate;
  return nullptr;
}

Metric citation_grounding_accuracy(std::span<const EvalRecord> records,
                                   const LegalGraph& graph) {
  std::size_t num = 0, den = 0;
  for (const EvalRecord& r : records) {
    if (!answered(r)) continue;
    for (const std::string& c : r.output->citations) {
      ++den;
      if (check_citation_exists(graph, c).exists) ++num;
    }
  }
  return Metric::ratio("citation_grounding_accuracy", num, den);
}

Metric stub_citation_fraction(std::span<const EvalRecord> records, const LegalGraph& graph) {
  std::size_t num = 0, den = 0;
  for (const EvalRecord& r : records) {
    if (!answered(r)) continue;
    for (const std::string& c : r.output->citations) {
      CitationCheck check = check_citation_exists(graph, c);
      if (!check.exists) continue;
      ++den;
      if (check.stub) ++num;
    }
  }
  return Metric::ratio("stub_citation_fraction", num, den);
}

Metric path_validity_rate(std::span<const EvalRecord> records) {
  std::size_t num = 0, den = 0;
  for (const EvalRecord& r : records) {
    if (!answered(r)) continue;
    ++den;
    const std::string& v = r.output->verification;
    if (v == to_string(Status::kValid) || v == to_string(Status::kConflict)) ++num;
  }
  return Metric::ratio("path_validity_rate", num, den);
}

Metric hallucinated_precedent_rate(std::span<const Claim> claims, const LegalGraph& graph) {
  std::size_t flagged = 0;
  for (const Claim& c : claims) {
    if (!verify(c, graph).path_valid()) ++flagged;
  }
  return Metric::ratio("hallucinated_precedent_rate", flagged, claims.size());
}

Metric fully_path_valid_fraction(std::span<const Claim> claims, const LegalGraph& graph) {
  std::size_t valid = 0;
  for (const Claim& c : claims) {
    if (verify(c, graph).path_valid()) ++valid;
  }
  return Metric::ratio("fully_path_valid_fraction", valid, claims.size());
}

Metric procedural_consistency(std::span<const EvalRecord> records, const LegalGraph& graph) {
  std::size_t num = 0, den = 0;
  for (const EvalRecord& r : records) {
    if (!r.truth.procedural_sequence) continue;
    ++den;
    if (validate_sequence(*r.truth.procedural_sequence, graph).valid) ++num;
  }
  return Metric::ratio("procedural_consistency", num, den);
}

Metric conflict_detection_rate(std::span<const EvalRecord> records) {
  std::size_t num = 0, den = 0;
  for (const EvalRecord& r : records) {
    if (!r.truth.conflict_expected) continue;
    ++den;
    if (r.output && r.output->conflict) ++num;
  }
  return Metric::ratio("conflict_detection_rate", num, den);
}

Metric false_conflict_rate(std::span<const EvalRecord> records) {
  std::size_t num = 0, den = 0;
  for (const EvalRecord& r : records) {
    if (r.truth.conflict_expected) continue;
    ++den;
    if (r.output && r.output->conflict) ++num;
  }
  return Metric::ratio("false_conflict_rate", num, den);
}

Metric statute_freshness_rate(std::span<const EvalRecord> records, const LegalGraph& graph) {
  std::size_t num = 0, den = 0;
  for (const EvalRecord& r : records) {
    if (!answered(r)) continue;
    for (const std::string& key : scan_sections(graph, r.output->answer).keys) {
      ++den;
      if (!provision_stale(graph, key, r.truth.repealed_sections)) ++num;
    }
  }
  return Metric::ratio("statute_freshness_rate", num, den);
}

Metric completion_rate(std::span<const EvalRecord> records) {
  std::size_t done = static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(),
                    [](const EvalRecord& r) { return r.output.has_value(); }));
  return Metric::ratio("completion_rate", done, records.size());
}

Metric abstention_rate(std::span<const EvalRecord> records) {
  std::size_t num = 0, den = 0;
  for (const EvalRecord& r : records) {
    if (!r.output) continue;
    ++den;
    if (r.output->abstained()) ++num;
  }
  return Metric::ratio("abstention_rate", num, den);
}

std::vector<Claim> claims_from_records(std::span<const EvalRecord> records,
                                       const LegalGraph& graph) {
  std::vector<Claim> out;
  for (const EvalRecord& r : records) {
    if (!answered(r)) continue;
    Claim c;
    c.answer_text = r.output->answer;
    c.cited_cases = r.output->citations;
    c.cited_sections = scan_sections(graph, r.output->answer).keys;
    out.push_back(std::move(c));
  }
  return out;
}

MetricReport evaluate(std::span<const EvalRecord> records, const LegalGraph& graph) {
  MetricReport report;
  std::vector<Claim> claims = claims_from_records(records, graph);
  report.metrics = {
      citation_grounding_accuracy(records, graph),
      stub_citation_fraction(records, graph),
      path_validity_rate(records),
      hallucinated_precedent_rate(claims, graph),
      fully_path_valid_fraction(claims, graph),
      procedural_consistency(records, graph),
      conflict_detection_rate(records),
      false_conflict_rate(records),
      statute_freshness_rate(records, graph),
  };
  report.completion_rate = completion_rate(records);
  report.abstention_rate = abstention_rate(records);
  return report;
}

json to_json(const Metric& m) {
  return json{{"name", m.name},
              {"numerator", m.numerator},
              {"denominator", m.denominator},
              {"value", m.value ? json(*m.value) : json()}};
}

json to_json(const MetricReport& report) {
  json metrics = json::array();
  for (const Metric& m : report.metrics) metrics.push_back(to_json(m));
  return json{{"metrics", std::move(metrics)},
              {"completion_rate", to_json(report.completion_rate)},
              {"abstention_rate", to_json(report.abstention_rate)}};
}

std::string format_table(const MetricReport& report) {
  std::vector<const Metric*> rows;
  for (const Metric& m : report.metrics) rows.push_back(&m);
  rows.push_back(&report.completion_rate);
  rows.push_back(&report.abstention_rate);
  std::size_t width = 6;
  for (const Metric* m : rows) width = std::max(width, m->name.size());
  std::ostringstream out;
  auto pad = [&](const std::string& s) { return s + std::string(width - s.size(), ' '); };
  out << pad("metric") << "  value      num/den\n";
  for (const Metric* m : rows) {
    char value[32];
    if (m->value) {
      std::snprintf(value, sizeof value, "%-9.4f", *m->value);
    } else {
      std::snprintf(value, sizeof value, "%-9s", "undefined");
    }
    out << pad(m->name) << "  " << value << "  " << m->numerator << "/" << m->denominator
        << "\n";
  }
  return out.str();
}

json to_json(const EvalRecord& r) {
  json truth{{"expected_grounded", r.truth.expected_grounded},
             {"conflict_expected", r.truth.conflict_expected},
             {"procedural_sequence", r.truth.procedural_sequence
                                         ? to_json(*r.truth.procedural_sequence)
                                         : json()},
             {"repealed_sections", r.truth.repealed_sections}};
  return json{{"query", r.query},
              {"output", r.output ? to_json(*r.output) : json()},
              {"truth", std::move(truth)}};
}

EvalRecord eval_record_from_json(const json& j) {
  if (!j.is_object()) throw MalformedRecord("record", "expected an object");
  EvalRecord r;
  if (auto it = j.find("query"); it != j.end() && it->is_string()) {
    r.query = it->get<std::string>();
  }
  if (auto it = j.find("output"); it != j.end() && !it->is_null()) {
    r.output = pipeline_output_from_json(*it);
  }
  if (auto it = j.find("truth"); it != j.end() && !it->is_null()) {
    const json& t = *it;
    if (!t.is_object()) throw MalformedRecord("truth", "expected an object");
    for (const std::string& c : string_set(t.value("expected_grounded", json()),
                                           "truth.expected_grounded")) {
      r.truth.expected_grounded.insert(normalize_citation(c));
    }
    if (auto c = t.find("conflict_expected"); c != t.end() && !c->is_null()) {
      if (!c->is_boolean()) throw MalformedRecord("truth.conflict_expected", "expected a boolean");
      r.truth.conflict_expected = c->get<bool>();
    }
    if (auto s = t.find("procedural_sequence"); s != t.end() && !s->is_null()) {
      r.truth.procedural_sequence = event_sequence_from_json(*s);
    }
    r.truth.repealed_sections =
        string_set(t.value("repealed_sections", json()), "truth.repealed_sections");
  }
  return r;
}

std::vector<EvalRecord> parse_eval_records(std::string_view text) {
  std::vector<EvalRecord> out;
  std::istringstream lines{std::string(text)};
  std::string line;
  std::size_t i = 0;
  while (std::getline(lines, line)) {
    if (trim(line).empty()) continue;
    std::string prefix = "record[" + std::to_string(i) + "]";
    json doc = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) throw MalformedRecord(prefix, "invalid JSON line");
    try {
      out.push_back(eval_record_from_json(doc));
    } catch (const MalformedRecord& e) {
      throw MalformedRecord(prefix + "." + e.field_path(),
                            std::string(e.what()).substr(e.field_path().size() + 2));
    } catch (const EmptyCitation& e) {
      throw MalformedRecord(prefix, e.what());
    }
    ++i;
  }
  return out;
}

}  // namespace irac

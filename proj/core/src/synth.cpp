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

#include "irac/synth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "irac/citation.hpp"
#include "irac/errors.hpp"
#include "irac/references.hpp"
#include "irac/text.hpp"

namespace irac {
namespace {

using json = nlohmann::json;

constexpr int kStatutes = 3;
constexpr int kSectionsPerStatute = 5;
constexpr std::int64_t kSectionPool = kStatutes * kSectionsPerStatute;
constexpr std::int64_t kMaxCases = 100000;

constexpr std::string_view kMatterTypes[] = {"bail", "service", "constitutional",
                                             "criminal appeal", "contempt"};
constexpr std::string_view kCourts[] = {"High Court of Delhi", "High Court of Bombay",
                                        "High Court of Madras"};
constexpr std::string_view kEventTypes[] = {
    "FIR_REGISTERED",  "ARREST",          "BAIL_DENIED",  "BAIL_APPLICATION_HIGH_COURT",
    "HEARING_HELD",    "BAIL_GRANTED",    "CHARGESHEET_FILED", "TRIAL_COMMENCED"};

std::string statute_name(int s) { return "SynthAct-" + std::to_string(s + 1); }

std::string format_citation(std::int64_t year, std::int64_t volume, std::int64_t page) {
  return "(" + std::to_string(year) + ") " + std::to_string(volume) + " SCC " +
         std::to_string(page);
}

std::string random_citation(Rng& rng) {
  return format_citation(rng.range(1950, 2023), rng.range(1, 12), rng.range(1, 999));
}

template <typename C>
const auto& pick(Rng& rng, const C& items) {
  return items[rng.below(std::size(items))];
}

std::int64_t read_int(const json& j, const char* name, std::int64_t fallback) {
  auto it = j.find(name);
  if (it == j.end() || it->is_null()) return fallback;
  if (!it->is_number_integer()) throw MalformedRecord(name, "expected an integer");
  return it->get<std::int64_t>();
}

bool grounded_path(const LegalGraph& graph, const Node& n) {
  return n.label == NodeLabel::kCase && !n.boolean("stub").value_or(false) &&
         graph.neighbors(n.id, EdgeType::kOverrules, Direction::kIn).empty();
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below requires n > 0");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % n + 1) % n;  // largest multiple of n, minus 1
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return x % n;
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("Rng::range requires lo <= hi");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(below(span));
}

bool Rng::chance(std::uint64_t numerator, std::uint64_t denominator) {
  return below(denominator) < numerator;
}

std::int64_t resolved_count(const FaultPlan& plan) {
  return std::lround(static_cast<double>(plan.n_conflicts) * plan.resolved_fraction);
}

void validate_plan(const FaultPlan& p) {
  auto fail = [](const std::string& m) { throw std::invalid_argument("fault plan: " + m); };
  if (p.n_cases < 0 || p.n_cites < 0 || p.n_overrules < 0 || p.n_conflicts < 0 ||
      p.n_repealed_sections < 0 || p.n_procedural_chains < 0 || p.chain_length < 0) {
    fail("counts must be non-negative");
  }
  if (!(p.resolved_fraction >= 0.0 && p.resolved_fraction <= 1.0)) {
    fail("resolved_fraction must be within [0, 1]");
  }
  if (p.n_cases > kMaxCases) fail("n_cases exceeds " + std::to_string(kMaxCases));
  if (p.n_cites > p.n_cases * (p.n_cases - 1)) fail("n_cites exceeds available case pairs");
  if (p.n_overrules > 0 && (p.n_overrules > p.n_cases || p.n_cases < 2)) {
    fail("n_overrules needs distinct targets and at least two cases");
  }
  std::int64_t needed = 2 * p.n_conflicts + (resolved_count(p) > 0 ? 1 : 0);
  if (needed > p.n_cases) fail("n_conflicts needs disjoint pairs plus a resolving case");
  if (p.n_repealed_sections > kSectionPool) {
    fail("n_repealed_sections exceeds the " + std::to_string(kSectionPool) + "-section pool");
  }
  if (p.n_procedural_chains > p.n_cases) fail("n_procedural_chains exceeds n_cases");
}

FaultPlan plan_from_json(const json& j) {
  if (!j.is_object()) throw MalformedRecord("plan", "expected an object");
  FaultPlan p;
  if (auto it = j.find("seed"); it != j.end() && !it->is_null()) {
    if (!it->is_number_unsigned() && !it->is_number_integer()) {
      throw MalformedRecord("seed", "expected an integer");
    }
    p.seed = it->get<std::uint64_t>();
  }
  p.n_cases = read_int(j, "n_cases", p.n_cases);
  p.n_cites = read_int(j, "n_cites", p.n_cites);
  p.n_overrules = read_int(j, "n_overrules", p.n_overrules);
  p.n_conflicts = read_int(j, "n_conflicts", p.n_conflicts);
  if (auto it = j.find("resolved_fraction"); it != j.end() && !it->is_null()) {
    if (!it->is_number()) throw MalformedRecord("resolved_fraction", "expected a number");
    p.resolved_fraction = it->get<double>();
  }
  p.n_repealed_sections = read_int(j, "n_repealed_sections", p.n_repealed_sections);
  p.n_procedural_chains = read_int(j, "n_procedural_chains", p.n_procedural_chains);
  p.chain_length = read_int(j, "chain_length", p.chain_length);
  return p;
}

json to_json(const FaultPlan& p) {
  return json{{"seed", p.seed},
              {"n_cases", p.n_cases},
              {"n_cites", p.n_cites},
              {"n_overrules", p.n_overrules},
              {"n_conflicts", p.n_conflicts},
              {"resolved_fraction", p.resolved_fraction},
              {"n_repealed_sections", p.n_repealed_sections},
              {"n_procedural_chains", p.n_procedural_chains},
              {"chain_length", p.chain_length}};
}

SynthCorpus generate(const FaultPlan& plan) {
  validate_plan(plan);
  Rng rng(plan.seed);
  SynthCorpus out;
  const auto n = static_cast<std::size_t>(plan.n_cases);

  std::vector<std::pair<int, int>> pool;
  for (int s = 0; s < kStatutes; ++s) {
    for (int k = 1; k <= kSectionsPerStatute; ++k) pool.emplace_back(s, k);
  }
  std::vector<std::size_t> pool_order(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool_order[i] = i;
  rng.shuffle(pool_order);
  std::set<std::size_t> repealed(pool_order.begin(),
                                 pool_order.begin() + plan.n_repealed_sections);
  for (std::size_t i : repealed) {
    out.truth.repealed_sections.insert(
        section_key(statute_name(pool[i].first), std::to_string(pool[i].second)));
  }

  std::set<std::string> used;
  std::vector<JudgmentRecord>& records = out.records;
  records.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    JudgmentRecord& r = records[i];
    std::string citation;
    do {
      citation = random_citation(rng);
    } while (!used.insert(fold_case(citation)).second);
    r.citation = citation;
    r.year = std::stoll(citation.substr(1, 4));
    r.name = "Synthetic Party " + std::to_string(i + 1) + " v. State";
    r.court = rng.chance(4, 5) ? "Supreme Court" : std::string(pick(rng, kCourts));
    r.matter_type = std::string(kMatterTypes[i % std::size(kMatterTypes)]);
    r.summary = "Synthetic judgment " + std::to_string(i + 1) + " on a " + r.matter_type +
                " matter.";
    r.issues.push_back({"Issue q" + std::to_string(i + 1) + "x under synthetic facts",
                        r.matter_type});
    r.rules.push_back({"Principle p" + std::to_string(i + 1) + "x governs this matter"});
    auto n_sections = static_cast<std::size_t>(rng.range(1, 2));
    std::vector<std::size_t> picks(pool.size());
    for (std::size_t k = 0; k < pool.size(); ++k) picks[k] = k;
    rng.shuffle(picks);
    picks.resize(n_sections);
    std::sort(picks.begin(), picks.end());
    for (std::size_t k : picks) {
      auto [s, number] = pool[k];
      std::string name = statute_name(s);
      auto it = std::find_if(r.statutes.begin(), r.statutes.end(),
                             [&](const StatuteEntry& e) { return e.name == name; });
      if (it == r.statutes.end()) {
        r.statutes.push_back({name, "Synthetic Act " + std::to_string(s + 1), false, {}});
        it = std::prev(r.statutes.end());
      }
      it->sections.push_back({std::to_string(number), repealed.contains(k)});
    }
  }

  // CITES: a uniform sample of distinct ordered pairs.
  if (plan.n_cites > 0) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(n * (n - 1));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b) pairs.emplace_back(a, b);
      }
    }
    rng.shuffle(pairs);
    pairs.resize(static_cast<std::size_t>(plan.n_cites));
    std::sort(pairs.begin(), pairs.end());
    for (auto [a, b] : pairs) {
      records[a].precedents.push_back({records[b].citation, EdgeType::kCites, {}});
    }
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;

  // OVERRULES: distinct targets, each with one overruling case.
  rng.shuffle(order);
  for (std::int64_t k = 0; k < plan.n_overrules; ++k) {
    std::size_t target = order[static_cast<std::size_t>(k)];
    std::size_t by;
    do {
      by = static_cast<std::size_t>(rng.below(n));
    } while (by == target);
    records[by].precedents.push_back({records[target].citation, EdgeType::kOverrules, {}});
    out.truth.overruled_cases.insert(records[target].citation);
  }

  // CONFLICTS_WITH: vertex-disjoint pairs; resolved pairs point at one resolver.
  rng.shuffle(order);
  const std::int64_t n_resolved = resolved_count(plan);
  std::optional<std::size_t> resolver;
  if (n_resolved > 0) resolver = order[static_cast<std::size_t>(2 * plan.n_conflicts)];
  for (std::int64_t k = 0; k < plan.n_conflicts; ++k) {
    std::size_t a = order[static_cast<std::size_t>(2 * k)];
    std::size_t b = order[static_cast<std::size_t>(2 * k + 1)];
    PlantedConflict c;
    c.case_a = records[a].citation;
    c.case_b = records[b].citation;
    c.conflict_type = std::string(pick(rng, kConflictTypes));
    c.resolved = k < n_resolved;
    records[a].precedents.push_back(
        {c.case_b, EdgeType::kConflictsWith, {{"conflict_type", c.conflict_type}}});
    if (c.resolved) {
      c.resolution_type = std::string(pick(rng, kResolutionTypes));
      PropertyMap attrs{{"resolution_type", *c.resolution_type}};
      records[a].precedents.push_back({records[*resolver].citation, EdgeType::kResolvedBy, attrs});
      records[b].precedents.push_back({records[*resolver].citation, EdgeType::kResolvedBy, attrs});
    }
    out.truth.conflict_pairs.push_back(std::move(c));
  }

  // Procedural chains with dated, triggering events.
  rng.shuffle(order);
  for (std::int64_t k = 0; k < plan.n_procedural_chains; ++k) {
    JudgmentRecord& r = records[order[static_cast<std::size_t>(k)]];
    auto day = std::chrono::sys_days{std::chrono::year{2000} / 1 / 1} +
               std::chrono::days{rng.range(0, 5000)};
    for (std::int64_t e = 0; e < plan.chain_length; ++e) {
      ProceduralEventEntry ev;
      ev.event_type = std::string(kEventTypes[static_cast<std::size_t>(e) % std::size(kEventTypes)]);
      ev.order = e + 1;
      ev.date = format_iso_date(std::chrono::year_month_day{day});
      ev.court_level = e % 2 == 0 ? "Sessions Court" : "High Court";
      if (e + 1 < plan.chain_length) ev.triggers_next = TriggerSpec{"synthetic condition"};
      r.procedural_events.push_back(std::move(ev));
      day += std::chrono::days{rng.range(1, 60)};
    }
    out.truth.procedural_chains.push_back(r.citation);
  }
  std::sort(out.truth.procedural_chains.begin(), out.truth.procedural_chains.end());
  return out;
}

std::string fabricate_citation(const LegalGraph& graph, Rng& rng) {
  std::string c = random_citation(rng);
  while (graph.find_node_folded(NodeLabel::kCase, c) != nullptr) {
    // Mutate the page until the citation falls outside the corpus.
    c = format_citation(std::stoll(c.substr(1, 4)), rng.range(1, 12), rng.range(1, 9999));
  }
  return c;
}

std::vector<LabeledClaim> sample_claims(const LegalGraph& graph, GroundTruth& truth,
                                        std::size_t n_valid, std::size_t n_invalid,
                                        std::uint64_t seed) {
  Rng rng(seed);
  std::vector<const Node*> eligible;
  for (NodeId id : graph.nodes_with_label(NodeLabel::kCase)) {
    const Node& n = graph.node(id);
    if (grounded_path(graph, n) && !truth.overruled_cases.contains(n.key)) {
      eligible.push_back(&n);
    }
  }
  if (n_valid > 0 && eligible.empty()) {
    throw std::invalid_argument("sample_claims: no citable case for valid claims");
  }
  std::vector<std::string> overruled(truth.overruled_cases.begin(),
                                     truth.overruled_cases.end());
  std::vector<LabeledClaim> out;

  for (std::size_t i = 0; i < n_valid; ++i) {
    const Node& c = *eligible[rng.below(eligible.size())];
    LabeledClaim lc;
    lc.valid = true;
    lc.claim.cited_cases.push_back(c.key);
    std::vector<std::string> sections;
    for (const Adjacent& a : graph.neighbors(c.id, EdgeType::kGovernedBy, Direction::kOut)) {
      const Node& s = graph.node(a.node);
      if (s.label == NodeLabel::kSection && !s.boolean("repealed").value_or(false) &&
          !truth.repealed_sections.contains(s.key)) {
        sections.push_back(s.key);
      }
    }
    if (!sections.empty() && rng.chance(1, 2)) {
      lc.claim.cited_sections.push_back(sections[rng.below(sections.size())]);
    }
    auto rules = graph.neighbors(c.id, EdgeType::kAppliesRule, Direction::kOut);
    if (!rules.empty() && rng.chance(1, 2)) {
      lc.claim.claimed_rule = graph.node(rules.front().node).key;
    }
    lc.claim.answer_text = "Synthetic answer relying on " + c.key + ".";
    out.push_back(std::move(lc));
  }

  for (std::size_t i = 0; i < n_invalid; ++i) {
    LabeledClaim lc;
    lc.valid = false;
    if (!eligible.empty() && rng.chance(1, 2)) {
      lc.claim.cited_cases.push_back(eligible[rng.below(eligible.size())]->key);
    }
    if (i % 2 == 1 && !overruled.empty()) {
      std::string bad = overruled[rng.below(overruled.size())];
      lc.expected_overruled.push_back(bad);
      lc.claim.cited_cases.push_back(std::move(bad));
    } else {
      std::string bad = fabricate_citation(graph, rng);
      lc.expected_missing.push_back(bad);
      lc.claim.cited_cases.push_back(std::move(bad));
    }
    lc.claim.answer_text = "Synthetic answer relying on " + lc.claim.cited_cases.back() + ".";
    out.push_back(std::move(lc));
  }

  for (const LabeledClaim& lc : out) {
    (lc.valid ? truth.valid_claims : truth.invalid_claims).push_back(lc);
  }
  return out;
}

json to_json(const Claim& c) {
  json j{{"answer_text", c.answer_text},
         {"cited_cases", c.cited_cases},
         {"cited_sections", c.cited_sections},
         {"claimed_rule", c.claimed_rule ? json(*c.claimed_rule) : json()},
         {"procedural_claim", json()}};
  if (c.procedural_claim) {
    j["procedural_claim"] = {{"current_event_type", c.procedural_claim->current_event_type},
                             {"next_event_type", c.procedural_claim->next_event_type}};
  }
  return j;
}

Claim claim_from_json(const json& j) {
  if (!j.is_object()) throw MalformedRecord("claim", "expected an object");
  Claim c;
  auto list = [&](const char* name) {
    std::vector<std::string> out;
    if (auto it = j.find(name); it != j.end() && !it->is_null()) {
      if (!it->is_array()) throw MalformedRecord(name, "expected a list");
      for (const json& v : *it) {
        if (!v.is_string()) throw MalformedRecord(name, "expected text");
        out.push_back(v.get<std::string>());
      }
    }
    return out;
  };
  if (auto it = j.find("answer_text"); it != j.end() && it->is_string()) {
    c.answer_text = it->get<std::string>();
  }
  c.cited_cases = list("cited_cases");
  c.cited_sections = list("cited_sections");
  if (auto it = j.find("claimed_rule"); it != j.end() && it->is_string()) {
    c.claimed_rule = it->get<std::string>();
  }
  if (auto it = j.find("procedural_claim"); it != j.end() && it->is_object()) {
    c.procedural_claim = ProceduralClaim{it->value("current_event_type", std::string()),
                                         it->value("next_event_type", std::string())};
  }
  return c;
}

json to_json(const LabeledClaim& lc) {
  return json{{"claim", to_json(lc.claim)},
              {"valid", lc.valid},
              {"expected_missing", lc.expected_missing},
              {"expected_overruled", lc.expected_overruled}};
}

json to_json(const GroundTruth& t) {
  json conflicts = json::array();
  for (const PlantedConflict& c : t.conflict_pairs) {
    conflicts.push_back({{"case_a", c.case_a},
                         {"case_b", c.case_b},
                         {"conflict_type", c.conflict_type},
                         {"resolved", c.resolved},
                         {"resolution_type", c.resolution_type ? json(*c.resolution_type)
                                                                : json()}});
  }
  json valid = json::array();
  for (const LabeledClaim& c : t.valid_claims) valid.push_back(to_json(c));
  json invalid = json::array();
  for (const LabeledClaim& c : t.invalid_claims) invalid.push_back(to_json(c));
  return json{{"overruled_cases", t.overruled_cases},
              {"conflict_pairs", std::move(conflicts)},
              {"repealed_sections", t.repealed_sections},
              {"procedural_chains", t.procedural_chains},
              {"valid_claims", std::move(valid)},
              {"invalid_claims", std::move(invalid)}};
}

}  // namespace irac

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

// Random (graph, claim) pairs and a brute-force verdict computed from the
// raw node and edge lists.

#pragma once

#include <algorithm>
#include <cctype>
#include <random>
#include <string>
#include <vector>

#include "irac/graph.hpp"
#include "irac/verifier.hpp"

namespace irac::testing {

struct FuzzCase {
  LegalGraph graph;
  Claim claim;
  std::vector<std::string> case_keys;
};

inline std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

inline std::string random_case_spelling(std::string key, std::mt19937_64& rng) {
  if (rng() % 3 == 0) key = lower(key);
  return key;
}

inline FuzzCase random_fuzz_case(std::mt19937_64& rng) {
  FuzzCase f;
  LegalGraph& g = f.graph;
  const int n_cases = 2 + static_cast<int>(rng() % 10);
  for (int i = 0; i < n_cases; ++i) {
    std::string key = "(" + std::to_string(1950 + i) + ") " + std::to_string(1 + rng() % 9) +
                      " SCC " + std::to_string(100 + i);
    PropertyMap props{{"year", std::int64_t{1950 + i}}};
    if (rng() % 6 == 0) props["stub"] = true;
    g.merge_node(NodeLabel::kCase, key, props);
    f.case_keys.push_back(key);
  }
  auto pick = [&] { return f.case_keys[rng() % f.case_keys.size()]; };
  auto ref = [](const std::string& k) { return NodeRef{NodeLabel::kCase, k}; };

  const int n_edges = static_cast<int>(rng() % (2 * n_cases + 1));
  for (int i = 0; i < n_edges; ++i) {
    std::string a = pick(), b = pick();
    if (a == b) continue;
    switch (rng() % 6) {
      case 0:
        g.merge_edge(EdgeType::kOverrules, ref(a), ref(b), {{"year", std::int64_t{2000}}});
        break;
      case 1:
        g.merge_edge(EdgeType::kConflictsWith, ref(a), ref(b),
                     {{"conflict_type", std::string("coordinate_bench")}, {"unresolved", true}});
        break;
      case 2:
        g.merge_edge(EdgeType::kResolvedBy, ref(a), ref(b),
                     {{"resolution_type", std::string("larger_bench")}});
        break;
      default:
        g.merge_edge(EdgeType::kCites, ref(a), ref(b));
    }
  }
  for (int r = 0; r < 3; ++r) {
    std::string rule = "rule-" + std::to_string(r);
    g.merge_node(NodeLabel::kRule, rule, {{"text", rule}});
    for (const std::string& c : f.case_keys) {
      if (rng() % 3 == 0) g.merge_edge(EdgeType::kAppliesRule, ref(c), {NodeLabel::kRule, rule});
    }
  }
  for (int s = 0; s < 3; ++s) {
    g.merge_node(NodeLabel::kSection, "Act-" + std::to_string(s) + "/1",
                 {{"number", std::string("1")}, {"repealed", rng() % 4 == 0}});
  }

  const int n_cites = static_cast<int>(rng() % 5);
  for (int i = 0; i < n_cites; ++i) {
    if (rng() % 4 == 0) {
      f.claim.cited_cases.push_back("(2099) 9 SCC " + std::to_string(rng() % 1000));
    } else {
      f.claim.cited_cases.push_back(random_case_spelling(pick(), rng));
    }
  }
  if (rng() % 3 == 0) f.claim.cited_sections.push_back("Act-" + std::to_string(rng() % 4) + "/1");
  if (rng() % 3 == 0) f.claim.claimed_rule = "rule-" + std::to_string(rng() % 4);
  return f;
}

// Status from first principles over nodes() and edges().
inline Status oracle_status(const Claim& claim, const LegalGraph& g) {
  auto find_case = [&](const std::string& c) -> const Node* {
    for (const Node& n : g.nodes()) {
      if (n.label == NodeLabel::kCase && lower(n.key) == lower(c)) return &n;
    }
    return nullptr;
  };
  auto has_edge = [&](EdgeType t, auto pred) {
    for (const Edge& e : g.edges()) {
      if (e.type == t && pred(e)) return true;
    }
    return false;
  };
  if (claim.cited_cases.empty()) return Status::kInvalid;
  std::vector<const Node*> cited;
  for (const std::string& c : claim.cited_cases) {
    const Node* n = find_case(c);
    if (n == nullptr) return Status::kInvalid;
    if (has_edge(EdgeType::kOverrules, [&](const Edge& e) { return e.dst == n->id; })) {
      return Status::kInvalid;
    }
    if (claim.claimed_rule) {
      if (n->boolean("stub") == true) return Status::kInvalid;
      bool witnessed = has_edge(EdgeType::kAppliesRule, [&](const Edge& e) {
        return e.src == n->id && g.node(e.dst).key == *claim.claimed_rule;
      });
      if (!witnessed) return Status::kInvalid;
    }
    cited.push_back(n);
  }
  for (const std::string& s : claim.cited_sections) {
    for (const Node& n : g.nodes()) {
      if (n.label == NodeLabel::kSection && n.key == s && n.boolean("repealed") == true) {
        return Status::kStale;
      }
    }
  }
  auto in_claim = [&](NodeId id) {
    return std::any_of(cited.begin(), cited.end(), [&](const Node* n) { return n->id == id; });
  };
  for (const Edge& e : g.edges()) {
    if (e.type != EdgeType::kConflictsWith || !in_claim(e.src) || !in_claim(e.dst)) continue;
    bool resolved = has_edge(EdgeType::kResolvedBy, [&](const Edge& r) {
      return r.src == e.src || r.src == e.dst;
    });
    if (!resolved) return Status::kConflict;
  }
  return Status::kValid;
}

}  // namespace irac::testing

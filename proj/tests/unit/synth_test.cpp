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

#include <set>

#include <gtest/gtest.h>

#include "irac/errors.hpp"
#include "irac/metrics.hpp"
#include "irac/snapshot.hpp"
#include "irac/synth.hpp"

namespace irac {
namespace {

LegalGraph loaded(const SynthCorpus& corpus) {
  LegalGraph g;
  load(corpus.records, g);
  return g;
}

TEST(Rng, RangesAndDeterminism) {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    auto x = a.range(-3, 3);
    EXPECT_EQ(x, b.range(-3, 3));
    EXPECT_GE(x, -3);
    EXPECT_LE(x, 3);
    EXPECT_LT(a.below(7), 7u);
    b.below(7);
  }
  EXPECT_THROW(a.below(0), std::invalid_argument);
}

TEST(Plan, ValidationAndJson) {
  FaultPlan p;
  EXPECT_NO_THROW(validate_plan(p));
  EXPECT_EQ(plan_from_json(to_json(p)).seed, p.seed);
  p.resolved_fraction = 1.5;
  EXPECT_THROW(validate_plan(p), std::invalid_argument);
  p = FaultPlan{};
  p.n_conflicts = 30;
  EXPECT_THROW(validate_plan(p), std::invalid_argument);
  EXPECT_THROW(plan_from_json(nlohmann::json{{"seed", "x"}}), MalformedRecord);
}

TEST(Generate, DeterministicForSeed) {
  FaultPlan p;
  EXPECT_EQ(snapshot_text(loaded(generate(p))), snapshot_text(loaded(generate(p))));
  FaultPlan q = p;
  q.seed = 8;
  EXPECT_NE(snapshot_text(loaded(generate(p))), snapshot_text(loaded(generate(q))));
}

TEST(Generate, PlantedFaultsAreInGraph) {
  FaultPlan p;
  SynthCorpus corpus = generate(p);
  LegalGraph g = loaded(corpus);
  EXPECT_EQ(corpus.records.size(), static_cast<std::size_t>(p.n_cases));
  EXPECT_EQ(corpus.truth.overruled_cases.size(), static_cast<std::size_t>(p.n_overrules));
  for (const std::string& c : corpus.truth.overruled_cases) {
    const Node* n = g.get_node(NodeLabel::kCase, c);
    ASSERT_NE(n, nullptr);
    EXPECT_FALSE(g.neighbors(n->id, EdgeType::kOverrules, Direction::kIn).empty());
  }
  ASSERT_EQ(corpus.truth.conflict_pairs.size(), static_cast<std::size_t>(p.n_conflicts));
  std::set<std::string> endpoints;
  std::int64_t resolved = 0;
  for (const PlantedConflict& pc : corpus.truth.conflict_pairs) {
    EXPECT_TRUE(endpoints.insert(pc.case_a).second);
    EXPECT_TRUE(endpoints.insert(pc.case_b).second);
    if (pc.resolved) ++resolved;
  }
  EXPECT_EQ(resolved, resolved_count(p));
  EXPECT_EQ(resolved_count(p), 2);
  EXPECT_EQ(corpus.truth.repealed_sections.size(),
            static_cast<std::size_t>(p.n_repealed_sections));
  for (const std::string& s : corpus.truth.repealed_sections) {
    const Node* n = g.get_node(NodeLabel::kSection, s);
    ASSERT_NE(n, nullptr);
    EXPECT_EQ(n->boolean("repealed"), true);
  }
  EXPECT_EQ(corpus.truth.procedural_chains.size(),
            static_cast<std::size_t>(p.n_procedural_chains));
  EXPECT_EQ(g.edges_of_type(EdgeType::kCites).size(), static_cast<std::size_t>(p.n_cites));
}

TEST(SampleClaims, VerifierFlagsExactlyTheInvalid) {
  FaultPlan p;
  SynthCorpus corpus = generate(p);
  LegalGraph g = loaded(corpus);
  auto claims = sample_claims(g, corpus.truth, 8, 2, p.seed);
  ASSERT_EQ(claims.size(), 10u);
  std::size_t flagged = 0;
  for (const LabeledClaim& lc : claims) {
    VerificationReport r = verify(lc.claim, g);
    EXPECT_EQ(r.path_valid(), lc.valid);
    if (r.status == Status::kInvalid) ++flagged;
    for (const std::string& m : lc.expected_missing) {
      EXPECT_FALSE(check_citation_exists(g, m).exists);
    }
  }
  EXPECT_EQ(flagged, 2u);
  EXPECT_EQ(corpus.truth.valid_claims.size(), 8u);
  EXPECT_EQ(corpus.truth.invalid_claims.size(), 2u);
}

TEST(SampleClaims, ClaimJsonRoundTrip) {
  FaultPlan p;
  SynthCorpus corpus = generate(p);
  LegalGraph g = loaded(corpus);
  for (const LabeledClaim& lc : sample_claims(g, corpus.truth, 5, 5, 3)) {
    EXPECT_EQ(claim_from_json(to_json(lc.claim)), lc.claim);
  }
}

}  // namespace
}  // namespace irac

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

#include <gtest/gtest.h>

#include "fuzz.hpp"
#include "irac/citation.hpp"
#include "irac/errors.hpp"
#include "irac/metrics.hpp"
#include "irac/snapshot.hpp"

namespace irac {
namespace {

TEST(VerifierOracle, MatchesBruteForce) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 2000; ++i) {
    testing::FuzzCase f = testing::random_fuzz_case(rng);
    ASSERT_EQ(verify(f.claim, f.graph).status, testing::oracle_status(f.claim, f.graph))
        << "case " << i << ": " << to_json(verify(f.claim, f.graph)).dump();
  }
}

TEST(VerifierOracle, OverrulingNeverUnlocksValid) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 1000; ++i) {
    testing::FuzzCase f = testing::random_fuzz_case(rng);
    Status before = verify(f.claim, f.graph).status;
    const std::string& a = f.case_keys[rng() % f.case_keys.size()];
    const std::string& b = f.case_keys[rng() % f.case_keys.size()];
    if (a == b) continue;
    f.graph.merge_edge(EdgeType::kOverrules, {NodeLabel::kCase, a}, {NodeLabel::kCase, b});
    Status after = verify(f.claim, f.graph).status;
    if (before != Status::kValid) {
      EXPECT_NE(after, Status::kValid);
    }
  }
}

TEST(VerifierOracle, ComplementOnRandomClaimSets) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    testing::FuzzCase f = testing::random_fuzz_case(rng);
    std::vector<Claim> claims{f.claim};
    for (int k = 0; k < 5; ++k) claims.push_back(testing::random_fuzz_case(rng).claim);
    Metric h = hallucinated_precedent_rate(claims, f.graph);
    Metric v = fully_path_valid_fraction(claims, f.graph);
    EXPECT_EQ(h.numerator + v.numerator, claims.size());
  }
}

TEST(Citation, NormalizeIdempotentOnRandomText) {
  std::mt19937_64 rng(5);
  const std::string alphabet = "()0123456789 SCCAIR.\"' \t";
  for (int i = 0; i < 2000; ++i) {
    std::string raw;
    for (int k = 0; k < 1 + static_cast<int>(rng() % 20); ++k) {
      raw += alphabet[rng() % alphabet.size()];
    }
    try {
      std::string once = normalize_citation(raw);
      EXPECT_EQ(normalize_citation(once), once) << raw;
    } catch (const Error&) {
    }
  }
}

TEST(Snapshot, RandomGraphsRoundTrip) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    testing::FuzzCase f = testing::random_fuzz_case(rng);
    std::string text = snapshot_text(f.graph);
    EXPECT_EQ(snapshot_text(graph_from_snapshot(nlohmann::json::parse(text))), text);
  }
}

}  // namespace
}  // namespace irac

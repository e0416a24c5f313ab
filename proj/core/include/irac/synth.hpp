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

// Seeded synthetic corpora with planted faults and exported ground truth.
// The same plan always yields byte-identical records and truth.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "irac/graph.hpp"
#include "irac/ingest.hpp"
#include "irac/verifier.hpp"

namespace irac {

/// Portable seeded generator. Draws use rejection sampling on the raw
/// 64-bit stream, so sequences do not depend on the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n). Requires n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi);
  /// True with probability numerator / denominator.
  bool chance(std::uint64_t numerator, std::uint64_t denominator);

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[static_cast<std::size_t>(below(i))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

struct FaultPlan {
  std::uint64_t seed = 7;
  std::int64_t n_cases = 40;
  std::int64_t n_cites = 60;
  std::int64_t n_overrules = 3;
  std::int64_t n_conflicts = 4;
  double resolved_fraction = 0.5;
  std::int64_t n_repealed_sections = 2;
  std::int64_t n_procedural_chains = 3;
  std::int64_t chain_length = 4;
};

/// Throws std::invalid_argument for negative counts, a fraction outside
/// [0, 1], or counts the case population cannot honour.
void validate_plan(const FaultPlan& plan);
/// Missing fields keep their defaults. Throws MalformedRecord.
FaultPlan plan_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FaultPlan& plan);

struct PlantedConflict {
  std::string case_a;
  std::string case_b;
  std::string conflict_type;
  bool resolved = false;
  std::optional<std::string> resolution_type;
  friend bool operator==(const PlantedConflict&, const PlantedConflict&) = default;
};

struct LabeledClaim {
  Claim claim;
  bool valid = false;
  std::vector<std::string> expected_missing;
  std::vector<std::string> expected_overruled;
};

struct GroundTruth {
  std::set<std::string> overruled_cases;
  std::vector<PlantedConflict> conflict_pairs;
  std::set<std::string> repealed_sections;
  std::vector<std::string> procedural_chains;  // citations of chain-bearing cases
  std::vector<LabeledClaim> valid_claims;
  std::vector<LabeledClaim> invalid_claims;
};

struct SynthCorpus {
  std::vector<JudgmentRecord> records;
  GroundTruth truth;
};

/// Number of conflicts planted as resolved: round(n_conflicts * fraction).
std::int64_t resolved_count(const FaultPlan& plan);

SynthCorpus generate(const FaultPlan& plan);

/// Labeled claims drawn from a loaded synthetic graph; also appended to
/// `truth`. Invalid claims alternate between a fabricated citation (mutated
/// until absent) and an overruled one. Throws std::invalid_argument when
/// the graph cannot supply the requested counts.
std::vector<LabeledClaim> sample_claims(const LegalGraph& graph, GroundTruth& truth,
                                        std::size_t n_valid, std::size_t n_invalid,
                                        std::uint64_t seed);

/// A "(YYYY) V SCC P" citation not present in `graph`.
std::string fabricate_citation(const LegalGraph& graph, Rng& rng);

nlohmann::json to_json(const Claim& claim);
Claim claim_from_json(const nlohmann::json& j);
nlohmann::json to_json(const LabeledClaim& claim);
nlohmann::json to_json(const GroundTruth& truth);

}  // namespace irac

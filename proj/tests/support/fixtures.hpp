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

// Shared fixture loading for tests and the acceptance runner.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "irac/graph.hpp"
#include "irac/ingest.hpp"

namespace irac::testing {

inline std::filesystem::path data_path(const std::string& relative) {
  return std::filesystem::path(IRAC_TEST_DATA_DIR) / relative;
}

inline std::vector<JudgmentRecord> read_records(const std::string& relative) {
  std::vector<JudgmentRecord> records;
  for (ParsedRecord& p : read_corpus(data_path(relative))) records.push_back(std::move(p.record));
  return records;
}

inline LegalGraph load_fixture(const std::string& relative) {
  LegalGraph graph;
  load(read_records(relative), graph);
  return graph;
}

inline LegalGraph sample_graph() { return load_fixture("sample_graph.json"); }

inline const std::vector<std::string>& fixture_corpora() {
  static const std::vector<std::string> kCorpora = {"sample_graph.json", "corpus_51.jsonl",
                                                    "conflict_fixture.json"};
  return kCorpora;
}

}  // namespace irac::testing

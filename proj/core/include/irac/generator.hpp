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

// Answer generators: the interface the pipeline drives, a table-driven
// mock for deterministic runs, and an HTTP client for a remote model.
//
// Wire contract (HTTP POST, JSON):
//   request  {"query", "candidates": [{citation, name, court, year, summary}],
//             "instruction", "rejection_reason": text|null}
//   response {"answer", "citations": [text], "abstain": bool}

#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "irac/retrieval.hpp"

namespace irac {

inline constexpr std::string_view kCiteOnlyInstruction =
    "Answer the query using only the candidate cases provided. Cite only from the "
    "provided list, using their exact citations. If none of them supports an answer, "
    "set abstain to true.";

struct GeneratorRequest {
  std::string query;
  std::vector<Candidate> candidates;
  std::string instruction{kCiteOnlyInstruction};
  std::optional<std::string> rejection_reason;
  int attempt = 1;  // 1-based; not sent on the wire
};

struct GeneratorResponse {
  std::string answer_text;
  std::vector<std::string> citations;
  bool abstain = false;
  friend bool operator==(const GeneratorResponse&, const GeneratorResponse&) = default;
};

/// Outcome of one generation attempt. `response` is empty when the attempt
/// failed (timeout, non-2xx status, malformed body); `failure` says why.
struct GenerationResult {
  std::optional<GeneratorResponse> response;
  std::string failure;
};

class Generator {
 public:
  virtual ~Generator() = default;
  /// Throws GeneratorUnreachable when the endpoint cannot be contacted.
  virtual GenerationResult generate(const GeneratorRequest& request,
                                    std::chrono::seconds timeout) = 0;
};

nlohmann::json to_json(const GeneratorRequest& request);
/// Throws MalformedRecord when the body violates the wire contract.
GeneratorResponse parse_generator_response(const nlohmann::json& body);

/// Scripted generator. Script format:
///   {"rules": [{"pattern": "bail", "responses": [R1, R2, ...]}, ...],
///    "default": R}
/// The first rule whose pattern occurs in the query (case-insensitive; ""
/// or "*" matches everything) answers; attempt k uses R_k, and the last
/// response repeats. R is a wire response, or {"timeout": true},
/// {"malformed": true} or {"unreachable": true}. Without a matching rule
/// the default (or an abstention) is used.
class MockGenerator : public Generator {
 public:
  explicit MockGenerator(nlohmann::json script);
  static MockGenerator from_file(const std::filesystem::path& path);

  GenerationResult generate(const GeneratorRequest& request,
                            std::chrono::seconds timeout) override;

  std::size_t calls() const { return calls_; }

 private:
  nlohmann::json script_;
  std::size_t calls_ = 0;
};

/// POSTs to `url` ("http://host:port/path").
class HttpGenerator : public Generator {
 public:
  explicit HttpGenerator(std::string url);

  GenerationResult generate(const GeneratorRequest& request,
                            std::chrono::seconds timeout) override;

 private:
  std::string origin_;
  std::string path_;
};

}  // namespace irac

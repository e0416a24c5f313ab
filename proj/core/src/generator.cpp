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

#include "irac/generator.hpp"

#include <algorithm>
#include <fstream>

#include "irac/errors.hpp"

namespace irac {
namespace {

using json = nlohmann::json;

bool pattern_matches(const json& rule, std::string_view query) {
  std::string pattern = rule.value("pattern", std::string());
  if (pattern.empty() || pattern == "*") return true;
  return fold_case(query).find(fold_case(pattern)) != std::string::npos;
}

GenerationResult play(const json& scripted) {
  if (scripted.value("unreachable", false)) {
    throw GeneratorUnreachable("scripted generator is unreachable");
  }
  if (scripted.value("timeout", false)) return {std::nullopt, "timeout"};
  if (scripted.value("malformed", false)) return {std::nullopt, "malformed response"};
  try {
    return {parse_generator_response(scripted), ""};
  } catch (const MalformedRecord& e) {
    return {std::nullopt, std::string("malformed response: ") + e.what()};
  }
}

}  // namespace

json to_json(const GeneratorRequest& request) {
  json candidates = json::array();
  for (const Candidate& c : request.candidates) {
    json j{{"citation", c.citation},
           {"name", c.name},
           {"court", c.court},
           {"year", nullptr},
           {"summary", c.summary}};
    if (c.year) j["year"] = *c.year;
    candidates.push_back(std::move(j));
  }
  return json{{"query", request.query},
              {"candidates", std::move(candidates)},
              {"instruction", request.instruction},
              {"rejection_reason", request.rejection_reason
                                       ? json(*request.rejection_reason)
                                       : json()}};
}

GeneratorResponse parse_generator_response(const json& body) {
  if (!body.is_object()) throw MalformedRecord("response", "expected an object");
  GeneratorResponse r;
  if (auto it = body.find("abstain"); it != body.end() && !it->is_null()) {
    if (!it->is_boolean()) throw MalformedRecord("abstain", "expected a boolean");
    r.abstain = it->get<bool>();
  }
  if (auto it = body.find("answer"); it != body.end() && !it->is_null()) {
    if (!it->is_string()) throw MalformedRecord("answer", "expected text");
    r.answer_text = it->get<std::string>();
  } else if (!r.abstain) {
    throw MalformedRecord("answer", "required field is missing");
  }
  if (auto it = body.find("citations"); it != body.end() && !it->is_null()) {
    if (!it->is_array()) throw MalformedRecord("citations", "expected a list");
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string()) {
        throw MalformedRecord("citations[" + std::to_string(i) + "]", "expected text");
      }
      r.citations.push_back((*it)[i].get<std::string>());
    }
  }
  return r;
}

MockGenerator::MockGenerator(json script) : script_(std::move(script)) {
  if (!script_.is_object()) throw MalformedRecord("script", "expected an object");
  if (auto it = script_.find("rules"); it != script_.end()) {
    if (!it->is_array()) throw MalformedRecord("script.rules", "expected a list");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& rule = (*it)[i];
      std::string path = "script.rules[" + std::to_string(i) + "]";
      if (!rule.is_object()) throw MalformedRecord(path, "expected an object");
      auto responses = rule.find("responses");
      if (responses == rule.end() || !responses->is_array() || responses->empty()) {
        throw MalformedRecord(path + ".responses", "expected a non-empty list");
      }
    }
  }
}

MockGenerator MockGenerator::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read mock script " + path.string());
  json script = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (script.is_discarded()) throw MalformedRecord("script", "invalid JSON in " + path.string());
  return MockGenerator(std::move(script));
}

GenerationResult MockGenerator::generate(const GeneratorRequest& request,
                                         std::chrono::seconds /*timeout*/) {
  ++calls_;
  if (auto rules = script_.find("rules"); rules != script_.end()) {
    for (const json& rule : *rules) {
      if (!pattern_matches(rule, request.query)) continue;
      const json& responses = rule["responses"];
      auto k = static_cast<std::size_t>(std::max(request.attempt, 1)) - 1;
      return play(responses[std::min(k, responses.size() - 1)]);
    }
  }
  if (auto fallback = script_.find("default"); fallback != script_.end()) {
    return play(*fallback);
  }
  return {GeneratorResponse{"", {}, true}, ""};
}

}  // namespace irac

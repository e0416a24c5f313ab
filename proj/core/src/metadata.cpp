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

#include <cctype>
#include <regex>

#include "irac/ingest.hpp"
#include "irac/references.hpp"
#include "irac/text.hpp"

namespace irac {
namespace {

std::string title_case(std::string_view text) {
  std::string out;
  bool start = true;
  for (char c : text) {
    auto u = static_cast<unsigned char>(c);
    out.push_back(static_cast<char>(start ? std::toupper(u) : std::tolower(u)));
    start = std::isspace(u) != 0;
  }
  return out;
}

std::optional<std::string> find_court(const std::string& head) {
  static const std::regex supreme(R"(\bsupreme\s+court\s+of\s+india\b)", std::regex::icase);
  static const std::regex high(R"(\bhigh[ \t]+court[ \t]+of[ \t]+([a-z]+(?:[ \t]+[a-z]+){0,3}))",
                               std::regex::icase);
  std::smatch m;
  if (std::regex_search(head, m, supreme)) return "Supreme Court";
  if (std::regex_search(head, m, high)) {
    std::vector<std::string> words;
    for (const std::string& w : tokenize(m[1].str())) {
      if (w == "at") break;
      words.push_back(w);
    }
    std::string place;
    for (const std::string& w : words) place += (place.empty() ? "" : " ") + w;
    return "High Court of " + title_case(place);
  }
  return std::nullopt;
}

std::optional<std::string> find_bench(const std::string& head) {
  static const std::regex bench(R"((?:bench|coram)\s*:\s*([^\n\r]+))", std::regex::icase);
  std::smatch m;
  if (!std::regex_search(head, m, bench)) return std::nullopt;
  std::string value = trim(m[1].str());
  if (value.empty()) return std::nullopt;
  return collapse_whitespace(value);
}

std::optional<std::int64_t> find_year(const std::string& head,
                                      const std::optional<std::string>& citation) {
  static const std::regex year(R"(\b(1[89]\d\d|20\d\d)\b)");
  std::smatch m;
  if (citation && std::regex_search(*citation, m, year)) return std::stoll(m[1].str());
  if (std::regex_search(head, m, year)) return std::stoll(m[1].str());
  return std::nullopt;
}

}  // namespace

MetadataGuess extract_metadata(std::string_view text) {
  MetadataGuess guess;
  std::string head(utf8_prefix(text, kMetadataWindow));
  if (auto citations = scan_citations(head); !citations.empty()) {
    guess.citation = citations.front();
  }
  guess.court = find_court(head);
  guess.bench = find_bench(head);
  guess.year = find_year(head, guess.citation);
  int populated = static_cast<int>(guess.citation.has_value()) +
                  static_cast<int>(guess.court.has_value()) +
                  static_cast<int>(guess.year.has_value()) +
                  static_cast<int>(guess.bench.has_value());
  guess.confidence = populated / 4.0;
  return guess;
}

nlohmann::json to_json(const MetadataGuess& guess) {
  nlohmann::json j{{"citation", nullptr}, {"court", nullptr}, {"year", nullptr},
                   {"bench", nullptr},    {"confidence", guess.confidence}};
  if (guess.citation) j["citation"] = *guess.citation;
  if (guess.court) j["court"] = *guess.court;
  if (guess.year) j["year"] = *guess.year;
  if (guess.bench) j["bench"] = *guess.bench;
  return j;
}

}  // namespace irac

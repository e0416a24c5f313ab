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

#include "irac/references.hpp"

#include <algorithm>
#include <regex>
#include <set>

#include "irac/citation.hpp"

namespace irac {
namespace {

const std::regex& citation_pattern() {
  static const std::regex re(
      R"(\(\d{4}\)\s+(?:supp\s*(?:\(\d+\)\s*)?)?(?:\d+\s+)?[a-z]{2,7}(?:\s+online\s+[a-z]{2,5})?\s+\d+)"
      R"(|\b\d{4}\s+scc\s+online\s+[a-z]{2,5}\s+\d+)"
      R"(|\bair\s+\d{4}\s+[a-z]{2,5}\s+\d+)",
      std::regex::icase | std::regex::ECMAScript);
  return re;
}

const std::regex& section_pattern() {
  static const std::regex re(
      R"(\b(?:section|sec\.|s\.)\s*(\d+[a-z]?)(?:\s+of)?(?:\s+the)?(?:\s+([a-z][a-z.]*))?)",
      std::regex::icase | std::regex::ECMAScript);
  return re;
}

std::string strip_dots_folded(std::string_view text) {
  std::string out;
  for (char c : fold_case(text)) {
    if (c != '.') out.push_back(c);
  }
  return out;
}

// "CrPC-1973" -> "crpc"; "Code of Criminal Procedure, 1973" -> "code".
std::string stem(std::string_view name) {
  auto end = name.find_first_of("-, /");
  return strip_dots_folded(name.substr(0, end));
}

bool hint_matches(const LegalGraph& graph, const Node& section,
                  std::string_view hint) {
  if (hint.empty()) return true;
  std::string h = strip_dots_folded(hint);
  const std::string* statute_name = section.text("statute_name");
  if (statute_name == nullptr) return false;
  if (stem(*statute_name) == h) return true;
  if (const Node* statute = graph.get_node(NodeLabel::kStatute, *statute_name)) {
    if (const std::string* title = statute->text("title")) {
      if (stem(*title) == h) return true;
    }
  }
  return false;
}

}  // namespace

std::string section_key(std::string_view statute_name, std::string_view number) {
  return std::string(statute_name) + "/" + std::string(number);
}

std::vector<std::string> scan_citations(std::string_view text) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  std::string s(text);
  for (auto it = std::sregex_iterator(s.begin(), s.end(), citation_pattern());
       it != std::sregex_iterator(); ++it) {
    std::string c = normalize_citation(it->str());
    if (seen.insert(fold_case(c)).second) out.push_back(std::move(c));
  }
  return out;
}

std::vector<SectionMention> scan_section_mentions(std::string_view text) {
  std::vector<SectionMention> out;
  std::string s(text);
  for (auto it = std::sregex_iterator(s.begin(), s.end(), section_pattern());
       it != std::sregex_iterator(); ++it) {
    SectionMention m{(*it)[1].str(), (*it)[2].matched ? (*it)[2].str() : ""};
    // Trailing sentence punctuation is not part of the statute name.
    while (!m.statute_hint.empty() && m.statute_hint.back() == '.') {
      m.statute_hint.pop_back();
    }
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  return out;
}

std::optional<std::string> resolve_section(const LegalGraph& graph,
                                           const SectionMention& mention) {
  std::optional<std::string> found;
  std::string number = fold_case(mention.number);
  for (NodeId id : graph.nodes_with_label(NodeLabel::kSection)) {
    const Node& section = graph.node(id);
    const std::string* n = section.text("number");
    if (n == nullptr || fold_case(*n) != number) continue;
    if (!hint_matches(graph, section, mention.statute_hint)) continue;
    if (found) return std::nullopt;  // ambiguous
    found = section.key;
  }
  return found;
}

SectionScan scan_sections(const LegalGraph& graph, std::string_view text) {
  SectionScan scan;
  for (const SectionMention& m : scan_section_mentions(text)) {
    if (auto key = resolve_section(graph, m)) {
      if (std::find(scan.keys.begin(), scan.keys.end(), *key) == scan.keys.end()) {
        scan.keys.push_back(std::move(*key));
      }
    } else {
      scan.unresolved.push_back(
          section_key(m.statute_hint.empty() ? "?" : m.statute_hint, m.number));
    }
  }
  return scan;
}

}  // namespace irac

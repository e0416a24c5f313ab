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

#include "irac/citation.hpp"

#include <set>

#include "irac/errors.hpp"
#include "irac/graph.hpp"
#include "irac/text.hpp"

namespace irac {
namespace {

// Straight/curly quotes, periods, commas and semicolons around a citation.
bool is_wrapping(std::string_view text, std::size_t pos, std::size_t& width) {
  static constexpr std::string_view kMultiByte[] = {"“", "”",
                                                    "‘", "’"};
  for (std::string_view q : kMultiByte) {
    if (text.substr(pos, q.size()) == q) {
      width = q.size();
      return true;
    }
  }
  char c = text[pos];
  width = 1;
  return c == '"' || c == '\'' || c == '.' || c == ',' || c == ';';
}

std::string strip_wrapping(std::string text) {
  bool changed = true;
  while (changed && !text.empty()) {
    changed = false;
    std::size_t width = 0;
    if (is_wrapping(text, 0, width)) {
      text.erase(0, width);
      changed = true;
    }
    for (std::size_t w : {std::size_t{3}, std::size_t{1}}) {
      if (text.size() >= w &&
          is_wrapping(text, text.size() - w, width) && width == w) {
        text.erase(text.size() - w);
        changed = true;
        break;
      }
    }
    text = trim(text);
  }
  return text;
}

}  // namespace

std::string normalize_citation(std::string_view raw) {
  std::string text = strip_wrapping(collapse_whitespace(raw));
  text = collapse_whitespace(text);
  if (text.empty()) throw EmptyCitation("empty citation");
  return text;
}

Citation Citation::parse(std::string_view raw) {
  return Citation(normalize_citation(raw));
}

std::string Citation::folded() const { return fold_case(text_); }

bool same_citation(std::string_view a, std::string_view b) {
  return fold_case(normalize_citation(a)) == fold_case(normalize_citation(b));
}

std::vector<Citation> dedup_citations(std::span<const Citation> citations) {
  std::vector<Citation> out;
  std::set<std::string> seen;
  for (const Citation& c : citations) {
    if (seen.insert(c.folded()).second) out.push_back(c);
  }
  return out;
}

}  // namespace irac

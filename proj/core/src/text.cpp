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

#include "irac/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>

namespace irac {
namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }

constexpr std::array<std::string_view, 78> kStopwords = {
    "a",      "about",  "after",   "again",  "against", "all",    "also",
    "am",     "an",     "and",     "any",    "are",     "as",     "at",
    "be",     "been",   "before",  "being",  "by",      "can",    "case",
    "cases",  "could",  "court",   "courts",  "did",     "do",     "does",
    "for",    "from",   "had",     "has",    "have",    "how",    "i",
    "if",     "in",     "into",    "is",     "it",      "its",    "law",
    "may",    "me",     "must",    "my",     "no",      "not",    "of",
    "on",     "or",     "our",     "shall",  "should",  "so",     "such",
    "than",   "that",   "the",     "their",  "there",   "these",  "this",
    "to",     "under",  "v",       "vs",     "was",     "what",   "when",
    "where",  "whether", "which",  "who",    "will",    "with",   "would",
    "you",
};
static_assert(std::is_sorted(kStopwords.begin(), kStopwords.end()));

}  // namespace

std::string trim(std::string_view text) {
  auto begin = std::find_if_not(text.begin(), text.end(), is_space);
  auto end = std::find_if_not(text.rbegin(), text.rend(), is_space).base();
  return begin < end ? std::string(begin, end) : std::string();
}

std::string collapse_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    auto uc = static_cast<unsigned char>(c);
    if (std::isalnum(uc)) {
      current.push_back(static_cast<char>(std::tolower(uc)));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

bool is_stopword(std::string_view token) {
  return std::binary_search(kStopwords.begin(), kStopwords.end(), token);
}

std::set<std::string> content_tokens(std::string_view text) {
  std::set<std::string> out;
  for (auto& token : tokenize(text)) {
    if (!is_stopword(token)) out.insert(std::move(token));
  }
  return out;
}

std::optional<std::chrono::year_month_day> parse_iso_date(
    std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  auto digits = [&](std::size_t pos, std::size_t len) -> std::optional<int> {
    int value = 0;
    for (std::size_t i = pos; i < pos + len; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
      value = value * 10 + (text[i] - '0');
    }
    return value;
  };
  auto y = digits(0, 4);
  auto m = digits(5, 2);
  auto d = digits(8, 2);
  if (!y || !m || !d) return std::nullopt;
  std::chrono::year_month_day date{std::chrono::year{*y},
                                   std::chrono::month{static_cast<unsigned>(*m)},
                                   std::chrono::day{static_cast<unsigned>(*d)}};
  if (!date.ok()) return std::nullopt;
  return date;
}

std::string format_iso_date(std::chrono::year_month_day date) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(date.year()),
                static_cast<unsigned>(date.month()),
                static_cast<unsigned>(date.day()));
  return buf;
}

long days_between(std::chrono::year_month_day from,
                  std::chrono::year_month_day to) {
  return (std::chrono::sys_days{to} - std::chrono::sys_days{from}).count();
}

std::string_view utf8_prefix(std::string_view text, std::size_t max_chars) {
  std::size_t chars = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    // Continuation bytes do not start a new code point.
    if ((static_cast<unsigned char>(text[i]) & 0xC0) == 0x80) continue;
    if (chars == max_chars) return text.substr(0, i);
    ++chars;
  }
  return text;
}

}  // namespace irac

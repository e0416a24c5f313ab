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

#pragma once

#include <chrono>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace irac {

std::string trim(std::string_view text);
std::string collapse_whitespace(std::string_view text);

/// Lower-cased runs of ASCII letters and digits.
std::vector<std::string> tokenize(std::string_view text);

/// English function words plus legal boilerplate ("court", "case", "v").
bool is_stopword(std::string_view token);

/// Distinct non-stopword tokens.
std::set<std::string> content_tokens(std::string_view text);

/// Strict "YYYY-MM-DD"; nullopt when malformed or not a calendar date.
std::optional<std::chrono::year_month_day> parse_iso_date(std::string_view text);
std::string format_iso_date(std::chrono::year_month_day date);

/// Signed day count from `from` to `to`.
long days_between(std::chrono::year_month_day from,
                  std::chrono::year_month_day to);

/// Truncates to at most `max_chars` UTF-8 code points.
std::string_view utf8_prefix(std::string_view text, std::size_t max_chars);

}  // namespace irac

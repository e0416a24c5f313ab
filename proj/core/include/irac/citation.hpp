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

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace irac {

/// Canonical law-report citation, e.g. "(2004) 7 SCC 528": trimmed,
/// single-spaced, surrounding quotes and periods removed. Letter case is
/// kept as written; `folded()` gives the case-insensitive matching form.
class Citation {
 public:
  /// Throws EmptyCitation when nothing is left after normalization.
  static Citation parse(std::string_view raw);

  const std::string& str() const noexcept { return text_; }
  std::string folded() const;

  friend bool operator==(const Citation&, const Citation&) = default;
  friend auto operator<=>(const Citation&, const Citation&) = default;

 private:
  explicit Citation(std::string text) : text_(std::move(text)) {}
  std::string text_;
};

/// Normalized text of `raw`; throws EmptyCitation. Idempotent.
std::string normalize_citation(std::string_view raw);

/// True when both citations normalize to the same text up to letter case.
bool same_citation(std::string_view a, std::string_view b);

/// Order-preserving dedup by folded form; the first spelling wins.
std::vector<Citation> dedup_citations(std::span<const Citation> citations);

}  // namespace irac

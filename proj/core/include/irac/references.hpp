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

// Free-text scanners for citation-like strings and statutory section
// mentions ("Section 439 CrPC").

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "irac/graph.hpp"

namespace irac {

/// Normalized citation-like strings in order of appearance, deduplicated.
/// Recognizes "(YYYY) V REPORTER P", "(YYYY) Supp (N) SCC P",
/// "YYYY SCC OnLine SC N" and "AIR YYYY SC N".
std::vector<std::string> scan_citations(std::string_view text);

struct SectionMention {
  std::string number;       // "439", "498A"
  std::string statute_hint; // "CrPC", "IPC", may be empty
  friend bool operator==(const SectionMention&, const SectionMention&) = default;
};

std::vector<SectionMention> scan_section_mentions(std::string_view text);

/// Key ("statute/number") of the unique Section node matching `mention`,
/// comparing the hint against the statute key stem and title.
std::optional<std::string> resolve_section(const LegalGraph& graph,
                                           const SectionMention& mention);

struct SectionScan {
  std::vector<std::string> keys;        // resolved Section keys
  std::vector<std::string> unresolved;  // "hint/number" for the rest
};

SectionScan scan_sections(const LegalGraph& graph, std::string_view text);

/// Section merge key for a statute name and section number.
std::string section_key(std::string_view statute_name, std::string_view number);

}  // namespace irac

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

#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "irac/citation.hpp"
#include "irac/errors.hpp"
#include "irac/ingest.hpp"
#include "irac/references.hpp"
#include "irac/text.hpp"

namespace irac {
namespace {

TEST(Citation, NormalizesWhitespaceAndQuotes) {
  EXPECT_EQ(normalize_citation("  (2004)   7 SCC\t528. "), "(2004) 7 SCC 528");
  EXPECT_EQ(normalize_citation("\"(2012) 9 SCC 1\""), "(2012) 9 SCC 1");
  EXPECT_EQ(normalize_citation("(2012) 9 SCC 1"), "(2012) 9 SCC 1");
  EXPECT_THROW(normalize_citation("   "), EmptyCitation);
}

TEST(Citation, NormalizationIsIdempotent) {
  for (std::string raw : {" (1978) 1  SCC 248 ", "'AIR 1967 SC 1643'", "(2019) 9 SCC 24."}) {
    std::string once = normalize_citation(raw);
    EXPECT_EQ(normalize_citation(once), once);
  }
}

TEST(Citation, CaseInsensitiveMatch) {
  EXPECT_TRUE(same_citation("(2004) 7 scc 528", "(2004) 7 SCC 528"));
  EXPECT_FALSE(same_citation("(2004) 7 SCC 529", "(2004) 7 SCC 528"));
  LegalGraph g = testing::sample_graph();
  const Node* n = g.find_node_folded(NodeLabel::kCase, "(2004) 7 scc 528");
  ASSERT_NE(n, nullptr);
  EXPECT_EQ(n->key, "(2004) 7 SCC 528");
}

TEST(Citation, DedupKeepsFirstSpelling) {
  std::vector<Citation> in = {Citation::parse("(2004) 7 scc 528"),
                              Citation::parse("(2004) 7 SCC 528"),
                              Citation::parse("(2012) 1 SCC 40")};
  auto out = dedup_citations(in);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].str(), "(2004) 7 scc 528");
}

TEST(Text, TokenizeAndStopwords) {
  auto tokens = tokenize("Bail, rejected by the Sessions Court!");
  EXPECT_EQ(tokens, (std::vector<std::string>{"bail", "rejected", "by", "the", "sessions",
                                              "court"}));
  EXPECT_TRUE(is_stopword("the"));
  EXPECT_FALSE(is_stopword("bail"));
  auto content = content_tokens("the fresh grounds are required");
  EXPECT_TRUE(content.count("fresh"));
  EXPECT_FALSE(content.count("the"));
}

TEST(Text, Utf8PrefixCountsCharacters) {
  std::string s = "\xe0\xa4\xa8\xe0\xa5\x8d abc";  // two Devanagari code points
  EXPECT_EQ(utf8_prefix(s, 2), "\xe0\xa4\xa8\xe0\xa5\x8d");
  EXPECT_EQ(utf8_prefix("abc", 10), "abc");
}

// Julian day number (Fliegel and Van Flandern).
long jdn(int y, int m, int d) {
  long a = (14 - m) / 12;
  long yy = y + 4800 - a;
  long mm = m + 12 * a - 3;
  return d + (153 * mm + 2) / 5 + 365 * yy + yy / 4 - yy / 100 + yy / 400 - 32045;
}

TEST(Text, DaysBetweenMatchesJulianDayOracle) {
  std::mt19937 rng(3);
  for (int i = 0; i < 500; ++i) {
    int y1 = 1900 + static_cast<int>(rng() % 200), m1 = 1 + static_cast<int>(rng() % 12),
        d1 = 1 + static_cast<int>(rng() % 28);
    int y2 = 1900 + static_cast<int>(rng() % 200), m2 = 1 + static_cast<int>(rng() % 12),
        d2 = 1 + static_cast<int>(rng() % 28);
    char a[16], b[16];
    std::snprintf(a, sizeof a, "%04d-%02d-%02d", y1, m1, d1);
    std::snprintf(b, sizeof b, "%04d-%02d-%02d", y2, m2, d2);
    auto da = parse_iso_date(a);
    auto db = parse_iso_date(b);
    ASSERT_TRUE(da && db);
    EXPECT_EQ(days_between(*da, *db), jdn(y2, m2, d2) - jdn(y1, m1, d1));
    EXPECT_EQ(format_iso_date(*da), a);
  }
  EXPECT_EQ(days_between(*parse_iso_date("2003-06-02"), *parse_iso_date("2003-07-14")), 42);
  EXPECT_FALSE(parse_iso_date("2003-02-30"));
  EXPECT_FALSE(parse_iso_date("2003-7-14"));
  EXPECT_FALSE(parse_iso_date("yesterday"));
}

TEST(References, ScanCitations) {
  auto found = scan_citations(
      "See Kalyan Chandra Sarkar v. Rajesh Ranjan (2004) 7 SCC 528 and (2012) 9 SCC 1.");
  EXPECT_EQ(found, (std::vector<std::string>{"(2004) 7 SCC 528", "(2012) 9 SCC 1"}));
  EXPECT_TRUE(scan_citations("no citations here").empty());
}

TEST(References, SectionMentionsResolveAgainstGraph) {
  auto mentions = scan_section_mentions("apply under Section 439 CrPC and s. 498A IPC");
  ASSERT_GE(mentions.size(), 1u);
  EXPECT_EQ(mentions[0].number, "439");
  LegalGraph g = testing::sample_graph();
  EXPECT_EQ(resolve_section(g, mentions[0]), "CrPC-1973/439");
  SectionScan scan = scan_sections(g, "under Section 439 CrPC");
  EXPECT_EQ(scan.keys, std::vector<std::string>{"CrPC-1973/439"});
  EXPECT_EQ(section_key("CrPC-1973", "439"), "CrPC-1973/439");
}

TEST(Metadata, HeaderPopulatesCitationAndCourt) {
  MetadataGuess g = extract_metadata(
      "IN THE SUPREME COURT OF INDIA\nCRIMINAL APPELLATE JURISDICTION\n"
      "(2004) 7 SCC 528\nBENCH: Ruma Pal, B.N. Srikrishna\nJudgment follows.");
  ASSERT_TRUE(g.citation);
  EXPECT_EQ(*g.citation, "(2004) 7 SCC 528");
  ASSERT_TRUE(g.court);
  EXPECT_EQ(*g.court, "Supreme Court");
  EXPECT_EQ(g.year, 2004);
  ASSERT_TRUE(g.bench);
  EXPECT_DOUBLE_EQ(g.confidence, 1.0);
}

TEST(Metadata, OnlyFirstWindowIsScanned) {
  std::string head(2500, 'x');
  head += " (2004) 7 SCC 528";
  MetadataGuess g = extract_metadata(head);
  EXPECT_FALSE(g.citation);
  EXPECT_DOUBLE_EQ(g.confidence, 0.0);
}

TEST(Metadata, HighCourtName) {
  MetadataGuess g = extract_metadata("IN THE HIGH COURT OF DELHI AT NEW DELHI\n2019");
  ASSERT_TRUE(g.court);
  EXPECT_EQ(*g.court, "High Court of Delhi");
  EXPECT_EQ(g.year, 2019);
}

}  // namespace
}  // namespace irac

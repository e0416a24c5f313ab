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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "irac/errors.hpp"
#include "irac/generator.hpp"
#include "irac/pipeline.hpp"

namespace irac {
namespace {

using json = nlohmann::json;

const char* kBailQuery = "My bail application was rejected by the Sessions Court. Can I apply again?";

MockGenerator script(json responses) {
  return MockGenerator(json{{"rules", json::array({{{"pattern", "*"}, {"responses", responses}}})}});
}

json answer(const std::string& text, std::vector<std::string> citations) {
  return json{{"answer", text}, {"citations", citations}};
}

TEST(Pipeline, WorkedExample) {
  LegalGraph g = testing::sample_graph();
  MockGenerator gen = MockGenerator::from_file(testing::data_path("mock/bail_worked_example.json"));
  PipelineOutput out = run_query(kBailQuery, g, gen);
  EXPECT_EQ(out.verification, "VALID");
  EXPECT_DOUBLE_EQ(out.confidence, 1.0);
  EXPECT_EQ(out.citations, std::vector<std::string>{"(2004) 7 SCC 528"});
  EXPECT_EQ(out.procedural_next_step, "BAIL_APPLICATION_HIGH_COURT");
  EXPECT_EQ(out.attempts, 1);
  EXPECT_EQ(out.scope_note, kScopeNote);
  EXPECT_FALSE(out.supporting_paths.empty());
}

TEST(Pipeline, AlwaysFabricatingAbstainsAfterThree) {
  LegalGraph g = testing::sample_graph();
  MockGenerator gen = MockGenerator::from_file(testing::data_path("mock/always_fabricate.json"));
  PipelineOutput out = run_query(kBailQuery, g, gen);
  EXPECT_EQ(out.verification, "ABSTAINED");
  EXPECT_TRUE(out.abstained());
  EXPECT_EQ(gen.calls(), 3u);
  EXPECT_EQ(out.attempts, 3);
  EXPECT_DOUBLE_EQ(out.confidence, 0.50);
  EXPECT_NE(out.answer.find("No verified answer is available from the current corpus"),
            std::string::npos);
  EXPECT_TRUE(out.citations.empty());
}

TEST(Pipeline, MaxRevisionsBoundsGenerations) {
  LegalGraph g = testing::sample_graph();
  for (int revisions : {0, 1, 4}) {
    MockGenerator gen = MockGenerator::from_file(testing::data_path("mock/always_fabricate.json"));
    PipelineConfig config;
    config.max_revisions = revisions;
    PipelineOutput out = run_query(kBailQuery, g, gen, config);
    EXPECT_EQ(gen.calls(), static_cast<std::size_t>(1 + revisions));
    EXPECT_TRUE(out.abstained());
  }
}

TEST(Pipeline, ConflictIsAnnotatedNotRevised) {
  LegalGraph g = testing::load_fixture("conflict_fixture.json");
  MockGenerator gen = MockGenerator::from_file(testing::data_path("mock/conflict.json"));
  PipelineOutput out = run_query("default bail computation", g, gen);
  EXPECT_EQ(out.verification, "CONFLICT");
  EXPECT_TRUE(out.conflict);
  EXPECT_EQ(out.conflict_type, "coordinate_bench");
  EXPECT_EQ(out.confidence_label, "low");
  ASSERT_TRUE(out.resolution);
  EXPECT_NE(out.resolution->find("unresolved"), std::string::npos);
  EXPECT_FALSE(out.answer.empty());
  EXPECT_EQ(gen.calls(), 1u);
}

TEST(Pipeline, RevisionRecoversAfterFabrication) {
  LegalGraph g = testing::sample_graph();
  MockGenerator gen = script(json::array(
      {answer("See (2031) 99 SCC 999.", {"(2031) 99 SCC 999"}),
       answer("See Kalyan Chandra Sarkar (2004) 7 SCC 528.", {"(2004) 7 SCC 528"})}));
  PipelineOutput out = run_query(kBailQuery, g, gen);
  EXPECT_EQ(out.verification, "VALID");
  EXPECT_EQ(out.attempts, 2);
}

TEST(Pipeline, TimeoutAndMalformedCountAsFailures) {
  LegalGraph g = testing::sample_graph();
  MockGenerator gen = script(json::array({json{{"timeout", true}}, json{{"malformed", true}},
                                          answer("See (2004) 7 SCC 528.", {"(2004) 7 SCC 528"})}));
  PipelineOutput out = run_query(kBailQuery, g, gen);
  EXPECT_EQ(out.verification, "VALID");
  EXPECT_EQ(out.attempts, 3);

  MockGenerator stuck = script(json::array({json{{"timeout", true}}}));
  PipelineOutput abstained = run_query(kBailQuery, g, stuck);
  EXPECT_TRUE(abstained.abstained());
  EXPECT_EQ(stuck.calls(), 3u);
}

TEST(Pipeline, GeneratorAbstentionIsHonoured) {
  LegalGraph g = testing::sample_graph();
  MockGenerator gen = script(json::array({json{{"abstain", true}}}));
  PipelineOutput out = run_query(kBailQuery, g, gen);
  EXPECT_TRUE(out.abstained());
  EXPECT_EQ(gen.calls(), 1u);
}

TEST(Pipeline, UnreachableGeneratorPropagates) {
  LegalGraph g = testing::sample_graph();
  MockGenerator gen = script(json::array({json{{"unreachable", true}}}));
  EXPECT_THROW(run_query(kBailQuery, g, gen), GeneratorUnreachable);
}

TEST(BuildClaim, ProseCitationWarning) {
  LegalGraph g = testing::sample_graph();
  GeneratorResponse r{"See (2004) 7 SCC 528 and (2012) 9 SCC 1 under Section 439 CrPC.",
                      {"(2004) 7 SCC 528"}, false};
  BuiltClaim built = build_claim(r, g);
  EXPECT_EQ(built.claim.cited_cases, std::vector<std::string>{"(2004) 7 SCC 528"});
  EXPECT_EQ(built.claim.cited_sections, std::vector<std::string>{"CrPC-1973/439"});
  ASSERT_EQ(built.warnings.size(), 1u);
  EXPECT_NE(built.warnings[0].find("(2012) 9 SCC 1"), std::string::npos);
}

TEST(PipelineOutput, JsonRoundTrip) {
  LegalGraph g = testing::sample_graph();
  MockGenerator gen = MockGenerator::from_file(testing::data_path("mock/bail_worked_example.json"));
  PipelineOutput out = run_query(kBailQuery, g, gen);
  json j = to_json(out);
  EXPECT_EQ(j.at("verification"), "VALID");
  EXPECT_EQ(j.at("procedural_next_step"), "BAIL_APPLICATION_HIGH_COURT");
  EXPECT_EQ(to_json(pipeline_output_from_json(j)), j);
}

TEST(Generator, RequestWireFormat) {
  GeneratorRequest req;
  req.query = "q";
  req.rejection_reason = "INVALID";
  req.attempt = 2;
  json j = to_json(req);
  EXPECT_EQ(j.at("query"), "q");
  EXPECT_EQ(j.at("instruction"), kCiteOnlyInstruction);
  EXPECT_EQ(j.at("rejection_reason"), "INVALID");
  EXPECT_FALSE(j.contains("attempt"));
  EXPECT_THROW(parse_generator_response(json{{"citations", json::array()}}), Error);
  EXPECT_TRUE(parse_generator_response(json{{"abstain", true}}).abstain);
}

}  // namespace
}  // namespace irac

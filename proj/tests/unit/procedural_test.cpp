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
#include "irac/procedural.hpp"

namespace irac {
namespace {

EventSequence bail_chain() {
  return {{"BAIL_DENIED", "2003-06-02", 1},
          {"BAIL_APPLICATION_HIGH_COURT", "2003-07-14", 2},
          {"HEARING_HELD", "2003-08-11", 3},
          {"BAIL_GRANTED", "2003-08-25", 4}};
}

void add_event(LegalGraph& g, const std::string& key, const std::string& type) {
  g.merge_node(NodeLabel::kProceduralEvent, key, {{"event_type", type}});
}

TEST(NextSteps, WorkedExampleCondition) {
  LegalGraph g = testing::sample_graph();
  auto steps = next_steps(g, "BAIL_DENIED");
  ASSERT_EQ(steps.size(), 1u);
  EXPECT_EQ(steps[0].event_type, "BAIL_APPLICATION_HIGH_COURT");
  EXPECT_EQ(steps[0].condition, "fresh grounds or changed circumstances");
  EXPECT_EQ(steps[0].court_level, "High Court");
  EXPECT_TRUE(next_steps(g, "NO_SUCH_STATE").empty());
}

TEST(NextSteps, RecursiveTriggersPermitted) {
  LegalGraph g;
  add_event(g, "d", "BAIL_DENIED");
  add_event(g, "a", "FRESH_BAIL_APPLICATION");
  g.merge_edge(EdgeType::kTriggers, {NodeLabel::kProceduralEvent, "d"},
               {NodeLabel::kProceduralEvent, "a"});
  g.merge_edge(EdgeType::kTriggers, {NodeLabel::kProceduralEvent, "a"},
               {NodeLabel::kProceduralEvent, "d"});
  auto from_app = next_steps(g, "FRESH_BAIL_APPLICATION");
  ASSERT_EQ(from_app.size(), 1u);
  EXPECT_EQ(from_app[0].event_type, "BAIL_DENIED");
  EXPECT_EQ(next_steps(g, "BAIL_DENIED")[0].event_type, "FRESH_BAIL_APPLICATION");
}

TEST(NextSteps, AmbiguousStateIsDeterministic) {
  LegalGraph g;
  add_event(g, "s", "CHARGESHEET_FILED");
  add_event(g, "x", "TRIAL_COMMENCED");
  add_event(g, "y", "DISCHARGE_APPLICATION");
  g.merge_edge(EdgeType::kTriggers, {NodeLabel::kProceduralEvent, "s"},
               {NodeLabel::kProceduralEvent, "x"});
  g.merge_edge(EdgeType::kTriggers, {NodeLabel::kProceduralEvent, "s"},
               {NodeLabel::kProceduralEvent, "y"});
  auto steps = next_steps(g, "CHARGESHEET_FILED");
  ASSERT_EQ(steps.size(), 2u);
  EXPECT_EQ(steps[0].event_type, "DISCHARGE_APPLICATION");
  EXPECT_EQ(steps[1].event_type, "TRIAL_COMMENCED");
  EXPECT_EQ(procedural_next_step(g, "CHARGESHEET_FILED"), "DISCHARGE_APPLICATION");
}

TEST(ValidateSequence, WorkedChainIsValid) {
  SequenceValidation v = validate_sequence(bail_chain(), testing::sample_graph());
  EXPECT_TRUE(v.valid) << (v.violations.empty() ? "" : v.violations[0]);
  EXPECT_TRUE(v.violations.empty());
}

TEST(ValidateSequence, DateInversionRejected) {
  EventSequence seq = bail_chain();
  seq[2].date = "2003-07-01";
  SequenceValidation v = validate_sequence(seq, testing::sample_graph());
  EXPECT_FALSE(v.valid);
}

TEST(ValidateSequence, GapMismatchRejected) {
  LegalGraph g;
  add_event(g, "a", "BAIL_DENIED");
  add_event(g, "b", "BAIL_APPLICATION_HIGH_COURT");
  g.merge_edge(EdgeType::kPrecedes, {NodeLabel::kProceduralEvent, "a"},
               {NodeLabel::kProceduralEvent, "b"}, {{"time_gap_days", std::int64_t{30}}});
  // 2003-06-02 to 2003-06-12 is 10 days by hand count.
  EventSequence seq = {{"BAIL_DENIED", "2003-06-02", 1},
                       {"BAIL_APPLICATION_HIGH_COURT", "2003-06-12", 2}};
  SequenceValidation v = validate_sequence(seq, g);
  EXPECT_FALSE(v.valid);
  ASSERT_FALSE(v.violations.empty());
  seq[1].date = "2003-07-02";  // 30 days
  EXPECT_TRUE(validate_sequence(seq, g).valid);
}

TEST(ValidateSequence, OrderAndReverseTransition) {
  EventSequence seq = bail_chain();
  seq[1].order = 1;
  EXPECT_FALSE(validate_sequence(seq, testing::sample_graph()).valid);
  EventSequence reversed = {{"BAIL_APPLICATION_HIGH_COURT", std::nullopt, 1},
                            {"BAIL_DENIED", std::nullopt, 2}};
  EXPECT_FALSE(validate_sequence(reversed, testing::sample_graph()).valid);
  EventSequence unknown = {{"ARREST", std::nullopt, 1}, {"REMAND", std::nullopt, 2}};
  SequenceValidation v = validate_sequence(unknown, testing::sample_graph());
  EXPECT_TRUE(v.valid);
  EXPECT_FALSE(v.warnings.empty());
}

TEST(InferState, BailDeniedContext) {
  LegalGraph g = testing::sample_graph();
  EXPECT_EQ(infer_procedural_state(
                "My bail application was rejected by the Sessions Court. Can I apply again?", g),
            "BAIL_DENIED");
  EXPECT_EQ(procedural_next_step(g, "BAIL_DENIED"), "BAIL_APPLICATION_HIGH_COURT");
  EXPECT_FALSE(infer_procedural_state("What does Article 14 guarantee?", g));
}

TEST(CaseSequence, FromGraphAndJson) {
  LegalGraph g = testing::sample_graph();
  EventSequence seq = case_event_sequence(g, "(2004) 7 SCC 528");
  EXPECT_EQ(seq, bail_chain());
  EXPECT_EQ(event_sequence_from_json(to_json(seq)), seq);
}

}  // namespace
}  // namespace irac

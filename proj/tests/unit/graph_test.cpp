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

#include <deque>
#include <map>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "irac/errors.hpp"
#include "irac/graph.hpp"
#include "irac/snapshot.hpp"

namespace irac {
namespace {

using testing::sample_graph;

NodeRef kalyan() { return {NodeLabel::kCase, "(2004) 7 SCC 528"}; }

TEST(MergeNode, StoresCaseProperties) {
  LegalGraph g;
  g.merge_node(NodeLabel::kCase, "(2004) 7 SCC 528",
               {{"court", std::string("Supreme Court")}, {"year", std::int64_t{2004}}});
  const Node* n = g.get_node(NodeLabel::kCase, "(2004) 7 SCC 528");
  ASSERT_NE(n, nullptr);
  EXPECT_EQ(*n->text("court"), "Supreme Court");
  EXPECT_EQ(n->integer("year"), 2004);
}

TEST(MergeNode, SectionRepealedFlag) {
  LegalGraph g;
  g.merge_node(NodeLabel::kSection, "CrPC-1973/439",
               {{"number", std::string("439")}, {"repealed", false}});
  const Node* n = g.get_node(NodeLabel::kSection, "CrPC-1973/439");
  ASSERT_NE(n, nullptr);
  EXPECT_EQ(n->boolean("repealed"), false);
}

TEST(MergeNode, RepeatedMergeUpdatesWithoutDuplicating) {
  LegalGraph g;
  NodeId a = g.merge_node(NodeLabel::kCase, "(2012) 1 SCC 40", {{"year", std::int64_t{2011}}});
  NodeId b = g.merge_node(NodeLabel::kCase, "(2012) 1 SCC 40", {{"year", std::int64_t{2012}}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(g.node_count(), 1u);
  EXPECT_EQ(g.node(a).integer("year"), 2012);
}

TEST(MergeNode, RejectsBadYearAndEmptyKey) {
  LegalGraph g;
  EXPECT_THROW(g.merge_node(NodeLabel::kCase, "(2004) 7 SCC 528", {{"year", std::int64_t{204}}}),
               SchemaViolation);
  EXPECT_THROW(g.merge_node(NodeLabel::kCase, ""), SchemaViolation);
  EXPECT_THROW(g.merge_node(NodeLabel::kSection, "X/1", {{"repealed", std::string("no")}}),
               SchemaViolation);
}

TEST(MergeEdge, ConflictAttributes) {
  LegalGraph g;
  g.merge_node(NodeLabel::kCase, "(2012) 9 SCC 1");
  g.merge_node(NodeLabel::kCase, "(2013) 4 SCC 20");
  EdgeId e = g.merge_edge(EdgeType::kConflictsWith, {NodeLabel::kCase, "(2013) 4 SCC 20"},
                          {NodeLabel::kCase, "(2012) 9 SCC 1"},
                          {{"conflict_type", std::string("coordinate_bench")},
                           {"unresolved", true}});
  EXPECT_EQ(*g.edge(e).text("conflict_type"), "coordinate_bench");
  EXPECT_EQ(g.edge(e).boolean("unresolved"), true);
  EXPECT_THROW(g.merge_edge(EdgeType::kConflictsWith, {NodeLabel::kCase, "(2013) 4 SCC 20"},
                            {NodeLabel::kCase, "(2012) 9 SCC 1"},
                            {{"conflict_type", std::string("vibes")}}),
               SchemaViolation);
}

TEST(MergeEdge, TriggersCondition) {
  LegalGraph g;
  g.merge_node(NodeLabel::kProceduralEvent, "a", {{"event_type", std::string("BAIL_DENIED")}});
  g.merge_node(NodeLabel::kProceduralEvent, "b",
               {{"event_type", std::string("BAIL_APPLICATION_HIGH_COURT")}});
  EdgeId e = g.merge_edge(EdgeType::kTriggers, {NodeLabel::kProceduralEvent, "a"},
                          {NodeLabel::kProceduralEvent, "b"},
                          {{"condition", std::string("fresh grounds or changed circumstances")}});
  EXPECT_EQ(*g.edge(e).text("condition"), "fresh grounds or changed circumstances");
}

TEST(MergeEdge, IdempotentAndValidated) {
  LegalGraph g;
  g.merge_node(NodeLabel::kCase, "A");
  g.merge_node(NodeLabel::kCase, "B");
  g.merge_node(NodeLabel::kRule, "r");
  EdgeId first = g.merge_edge(EdgeType::kCites, {NodeLabel::kCase, "A"}, {NodeLabel::kCase, "B"});
  EdgeId second = g.merge_edge(EdgeType::kCites, {NodeLabel::kCase, "A"}, {NodeLabel::kCase, "B"});
  EXPECT_EQ(first, second);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_THROW(g.merge_edge(EdgeType::kOverrules, {NodeLabel::kCase, "A"},
                            {NodeLabel::kRule, "r"}),
               IllegalEndpoints);
  EXPECT_THROW(g.merge_edge(EdgeType::kCites, {NodeLabel::kCase, "A"}, {NodeLabel::kCase, "Z"}),
               MissingEndpoint);
  EXPECT_THROW(g.merge_edge(EdgeType::kPrecedes, {NodeLabel::kCase, "A"},
                            {NodeLabel::kCase, "B"}),
               IllegalEndpoints);
}

TEST(MergeEdge, NegativeGapRejected) {
  LegalGraph g;
  g.merge_node(NodeLabel::kProceduralEvent, "a");
  g.merge_node(NodeLabel::kProceduralEvent, "b");
  EXPECT_THROW(g.merge_edge(EdgeType::kPrecedes, {NodeLabel::kProceduralEvent, "a"},
                            {NodeLabel::kProceduralEvent, "b"},
                            {{"time_gap_days", std::int64_t{-1}}}),
               SchemaViolation);
}

TEST(Lookup, WorkedExampleNodes) {
  LegalGraph g = sample_graph();
  const Node* c = g.get_node(NodeLabel::kCase, "(2004) 7 SCC 528");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(*c->text("name"), "Kalyan Chandra Sarkar v. Rajesh Ranjan");
  const Node* s = g.get_node(NodeLabel::kSection, "CrPC-1973/439");
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->boolean("repealed"), false);
  EXPECT_EQ(g.get_node(NodeLabel::kCase, "(1999) 99 SCC 9999"), nullptr);
}

TEST(Neighbors, NotOverruledAndTriggers) {
  LegalGraph g = sample_graph();
  const Node* c = g.get_node(kalyan().label, kalyan().key);
  ASSERT_NE(c, nullptr);
  EXPECT_TRUE(g.neighbors(c->id, EdgeType::kOverrules, Direction::kIn).empty());

  const Node* denied = nullptr;
  for (NodeId id : g.nodes_with_label(NodeLabel::kProceduralEvent)) {
    if (*g.node(id).text("event_type") == "BAIL_DENIED") denied = &g.node(id);
  }
  ASSERT_NE(denied, nullptr);
  std::vector<std::string> next;
  for (const Adjacent& a : g.neighbors(denied->id, EdgeType::kTriggers, Direction::kOut)) {
    next.push_back(*g.node(a.node).text("event_type"));
  }
  EXPECT_EQ(next, std::vector<std::string>{"BAIL_APPLICATION_HIGH_COURT"});
}

TEST(FindPath, WorkedExampleChainHasThreeEdges) {
  LegalGraph g = sample_graph();
  std::map<std::string, NodeId> by_type;
  for (NodeId id : g.nodes_with_label(NodeLabel::kProceduralEvent)) {
    by_type[*g.node(id).text("event_type")] = id;
  }
  auto path = g.find_path(by_type.at("BAIL_DENIED"), by_type.at("BAIL_GRANTED"),
                          {EdgeType::kTriggers, EdgeType::kResultsIn}, 5);
  ASSERT_TRUE(path.has_value());
  EXPECT_EQ(path->length(), 3u);
  EXPECT_EQ(path->nodes.size(), 4u);
  EXPECT_FALSE(g.find_path(by_type.at("BAIL_DENIED"), by_type.at("BAIL_GRANTED"),
                           {EdgeType::kTriggers, EdgeType::kResultsIn}, 2));
  EXPECT_THROW(g.find_path(by_type.at("BAIL_DENIED"), by_type.at("BAIL_GRANTED"),
                           {EdgeType::kTriggers}, 0),
               std::invalid_argument);
}

// Reference BFS over a plain adjacency list.
std::optional<std::size_t> oracle_distance(const LegalGraph& g, NodeId src, NodeId dst,
                                           EdgeTypeSet allowed, int max_depth) {
  std::map<std::uint32_t, std::vector<std::uint32_t>> adj;
  for (const Edge& e : g.edges()) {
    if (allowed.contains(e.type)) adj[e.src.value].push_back(e.dst.value);
  }
  std::map<std::uint32_t, int> dist{{src.value, 0}};
  std::deque<std::uint32_t> q{src.value};
  while (!q.empty()) {
    auto u = q.front();
    q.pop_front();
    if (u == dst.value) return static_cast<std::size_t>(dist[u]);
    if (dist[u] == max_depth) continue;
    for (auto v : adj[u]) {
      if (!dist.count(v)) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
    }
  }
  return std::nullopt;
}

TEST(FindPath, MatchesReferenceBfsOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    LegalGraph g;
    const int n = 20;
    for (int i = 0; i < n; ++i) g.merge_node(NodeLabel::kCase, "C" + std::to_string(i));
    for (int k = 0; k < 35; ++k) {
      auto a = static_cast<std::uint32_t>(rng() % n);
      auto b = static_cast<std::uint32_t>(rng() % n);
      if (a == b) continue;
      g.merge_edge(rng() % 3 ? EdgeType::kCites : EdgeType::kDistinguishes, NodeId{a}, NodeId{b});
    }
    for (int q = 0; q < 20; ++q) {
      NodeId s{static_cast<std::uint32_t>(rng() % n)};
      NodeId d{static_cast<std::uint32_t>(rng() % n)};
      int depth = 1 + static_cast<int>(rng() % 5);
      auto path = g.find_path(s, d, {EdgeType::kCites}, depth);
      auto expected = oracle_distance(g, s, d, {EdgeType::kCites}, depth);
      ASSERT_EQ(path.has_value(), expected.has_value());
      if (!path) continue;
      EXPECT_EQ(path->length(), *expected);
      for (std::size_t i = 0; i < path->edges.size(); ++i) {
        const Edge& e = g.edge(path->edges[i]);
        EXPECT_EQ(e.type, EdgeType::kCites);
        EXPECT_EQ(e.src, path->nodes[i]);
        EXPECT_EQ(e.dst, path->nodes[i + 1]);
      }
    }
  }
}

TEST(Stats, SampleGraphTotals) {
  LegalGraph g = sample_graph();
  GraphStats s = g.stats();
  EXPECT_EQ(s.node_count_by_label.at(NodeLabel::kCase), 4u);
  std::size_t nodes = 0, edges = 0;
  for (const auto& [label, n] : s.node_count_by_label) nodes += n;
  for (const auto& [type, n] : s.edge_count_by_type) edges += n;
  EXPECT_EQ(nodes, s.total_nodes);
  EXPECT_EQ(edges, s.total_edges);
  EXPECT_EQ(s.total_nodes, g.node_count());
}

TEST(Snapshot, RoundTripIsCanonical) {
  LegalGraph g = sample_graph();
  std::string text = snapshot_text(g);
  LegalGraph copy = graph_from_snapshot(nlohmann::json::parse(text));
  EXPECT_EQ(snapshot_text(copy), text);
  EXPECT_EQ(copy.stats(), g.stats());
}

TEST(Snapshot, RejectsUnknownLabel) {
  nlohmann::json bad = to_snapshot(sample_graph());
  bad["nodes"][0]["label"] = "Planet";
  EXPECT_THROW(graph_from_snapshot(bad), Error);
}

TEST(SharedGraph, ReadAndWrite) {
  SharedGraph shared;
  shared.write([](LegalGraph& g) { g.merge_node(NodeLabel::kCase, "A"); });
  EXPECT_EQ(shared.read([](const LegalGraph& g) { return g.node_count(); }), 1u);
}

}  // namespace
}  // namespace irac

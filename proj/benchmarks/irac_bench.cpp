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

#include <filesystem>

#include <benchmark/benchmark.h>

#include "irac/ingest.hpp"
#include "irac/retrieval.hpp"
#include "irac/synth.hpp"
#include "irac/verifier.hpp"

namespace {

using irac::FaultPlan;
using irac::LegalGraph;

FaultPlan plan_for(std::int64_t n_cases) {
  FaultPlan p;
  p.n_cases = n_cases;
  p.n_cites = n_cases * 2;
  p.n_conflicts = std::min<std::int64_t>(4, n_cases / 3);
  return p;
}

LegalGraph synthetic_graph(std::int64_t n_cases) {
  LegalGraph g;
  irac::load(irac::generate(plan_for(n_cases)).records, g);
  return g;
}

void BM_Merge(benchmark::State& state) {
  auto records = irac::generate(plan_for(state.range(0))).records;
  for (auto _ : state) {
    LegalGraph g;
    irac::load(records, g);
    benchmark::DoNotOptimize(g.node_count());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Merge)->Arg(40)->Arg(400)->Arg(4000);

void BM_FindPath(benchmark::State& state) {
  LegalGraph g = synthetic_graph(state.range(0));
  auto cases = g.nodes_with_label(irac::NodeLabel::kCase);
  std::size_t i = 0;
  for (auto _ : state) {
    auto src = cases[i % cases.size()];
    auto dst = cases[(i * 7 + 3) % cases.size()];
    benchmark::DoNotOptimize(g.find_path(src, dst, {irac::EdgeType::kCites}, 6));
    ++i;
  }
}
BENCHMARK(BM_FindPath)->Arg(40)->Arg(400)->Arg(4000);

void BM_Verify(benchmark::State& state) {
  auto corpus = irac::generate(plan_for(state.range(0)));
  LegalGraph g;
  irac::load(corpus.records, g);
  auto claims = irac::sample_claims(g, corpus.truth, 16, 16, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(irac::verify(claims[i++ % claims.size()].claim, g));
  }
}
BENCHMARK(BM_Verify)->Arg(40)->Arg(400)->Arg(4000);

void BM_RetrieveCorpus51(benchmark::State& state) {
  LegalGraph g;
  std::vector<irac::JudgmentRecord> records;
  for (auto& p : irac::read_corpus(std::filesystem::path(IRAC_BENCH_DATA_DIR) / "corpus_51.jsonl")) {
    records.push_back(std::move(p.record));
  }
  irac::load(records, g);
  irac::Query q{"My bail application was rejected by the Sessions Court. Can I apply again?",
                {}, {}, {}};
  for (auto _ : state) benchmark::DoNotOptimize(irac::retrieve(q, g));
}
BENCHMARK(BM_RetrieveCorpus51);

}  // namespace

BENCHMARK_MAIN();

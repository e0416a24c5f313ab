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

#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "irac/errors.hpp"
#include "irac/ingest.hpp"
#include "irac/metrics.hpp"
#include "irac/pipeline.hpp"
#include "irac/procedural.hpp"
#include "irac/retrieval.hpp"
#include "irac/snapshot.hpp"
#include "irac/synth.hpp"
#include "irac/text.hpp"
#include "irac/verifier.hpp"

namespace irac::cli {
namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string snapshot;
  std::vector<std::string> corpora;

  void bind(CLI::App* cmd) {
    cmd->add_option("--snapshot", snapshot,
                    "Graph snapshot to read (default: $" + std::string(kSnapshotEnv) + ")");
    cmd->add_option("--corpus", corpora, "Corpus file to load instead of a snapshot (repeatable)")
        ->allow_extra_args(false);
  }

  bool given() const {
    return !snapshot.empty() || !corpora.empty() || std::getenv(kSnapshotEnv) != nullptr;
  }

  LegalGraph load(std::ostream& err) const {
    std::string path = snapshot;
    if (path.empty() && corpora.empty()) {
      const char* env = std::getenv(kSnapshotEnv);
      if (env == nullptr || *env == '\0') {
        throw UsageError("no graph: pass --snapshot, --corpus or set " +
                         std::string(kSnapshotEnv));
      }
      path = env;
    }
    LegalGraph graph;
    if (!path.empty()) graph = load_snapshot(path);
    for (const std::string& c : corpora) {
      std::vector<JudgmentRecord> records;
      for (ParsedRecord& p : read_corpus(c)) records.push_back(std::move(p.record));
      LoadReport report = irac::load(records, graph);
      for (const std::string& w : report.warnings) err << "warning: " << w << "\n";
    }
    return graph;
  }
};

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const std::string& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!trim(part).empty()) out.push_back(trim(part));
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("failed writing " + path);
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

json stats_json(const LegalGraph& graph) {
  GraphStats s = graph.stats();
  json nodes = json::object();
  for (const auto& [label, n] : s.node_count_by_label) nodes[std::string(to_string(label))] = n;
  json edges = json::object();
  for (const auto& [type, n] : s.edge_count_by_type) edges[std::string(to_string(type))] = n;
  json decades = json::object();
  for (const auto& [decade, n] : compute_decade_histogram(graph)) {
    decades[decade_label(decade)] = n;
  }
  return json{{"nodes", std::move(nodes)},
              {"edges", std::move(edges)},
              {"total_nodes", s.total_nodes},
              {"total_edges", s.total_edges},
              {"decade_histogram", std::move(decades)}};
}

void stats_table(const json& stats, std::ostream& err) {
  err << "decade  cases\n";
  std::size_t total = 0;
  for (const auto& [decade, n] : stats["decade_histogram"].items()) {
    err << decade << std::string(decade.size() < 8 ? 8 - decade.size() : 1, ' ')
        << n.get<std::size_t>() << "\n";
    total += n.get<std::size_t>();
  }
  err << "total   " << total << "\n";
}

std::unique_ptr<Generator> make_generator(const std::string& mock, const std::string& url) {
  if (!mock.empty() && !url.empty()) {
    throw UsageError("--mock and --generator-url are mutually exclusive");
  }
  if (!mock.empty()) return std::make_unique<MockGenerator>(MockGenerator::from_file(mock));
  std::string endpoint = url;
  if (endpoint.empty()) {
    if (const char* env = std::getenv(kGeneratorUrlEnv)) endpoint = env;
  }
  if (endpoint.empty()) {
    throw UsageError("no generator: pass --mock, --generator-url or set " +
                     std::string(kGeneratorUrlEnv));
  }
  return std::make_unique<HttpGenerator>(endpoint);
}

std::vector<EvalRecord> synth_eval_records(const LegalGraph& graph, const GroundTruth& truth,
                                           const std::vector<LabeledClaim>& claims) {
  std::vector<EvalRecord> out;
  for (std::size_t i = 0; i < claims.size(); ++i) {
    const LabeledClaim& lc = claims[i];
    VerificationReport report = verify(lc.claim, graph);
    EvalRecord r;
    r.query = "synthetic claim " + std::to_string(i + 1);
    r.output = output_from_report(GeneratorResponse{lc.claim.answer_text, lc.claim.cited_cases,
                                                    false},
                                  normalize_claim(lc.claim), report, 1);
    for (const std::string& c : lc.claim.cited_cases) {
      bool fabricated = std::find(lc.expected_missing.begin(), lc.expected_missing.end(), c) !=
                        lc.expected_missing.end();
      if (!fabricated) r.truth.expected_grounded.insert(c);
    }
    for (const PlantedConflict& pc : truth.conflict_pairs) {
      auto cites = [&](const std::string& c) {
        return std::find(lc.claim.cited_cases.begin(), lc.claim.cited_cases.end(), c) !=
               lc.claim.cited_cases.end();
      };
      if (!pc.resolved && cites(pc.case_a) && cites(pc.case_b)) r.truth.conflict_expected = true;
    }
    r.truth.repealed_sections = truth.repealed_sections;
    if (i < truth.procedural_chains.size()) {
      r.truth.procedural_sequence = case_event_sequence(graph, truth.procedural_chains[i]);
    }
    out.push_back(std::move(r));
  }
  return out;
}

class Timer {
 public:
  Timer(std::ostream& err, std::string label)
      : err_(err), label_(std::move(label)), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start_)
                  .count();
    err_ << "[irac] " << label_ << " finished in " << ms << " ms\n";
  }

 private:
  std::ostream& err_;
  std::string label_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph-constrained verification for legal question answering", "irac"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every command");

  std::function<int()> action;

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Load judgment records and report the merge");
  std::vector<std::string> ingest_paths;
  std::string ingest_out, ingest_base;
  ingest->add_option("corpus", ingest_paths, "Corpus file(s): JSON array, object or JSON lines")
      ->required();
  ingest->add_option("--snapshot", ingest_out, "Write the resulting graph snapshot here");
  ingest->add_option("--into", ingest_base, "Existing snapshot to merge into");
  ingest->callback([&] {
    action = [&] {
      LegalGraph graph;
      if (!ingest_base.empty()) graph = load_snapshot(ingest_base);
      std::vector<JudgmentRecord> records;
      std::vector<std::string> parse_warnings;
      for (const std::string& path : ingest_paths) {
        for (ParsedRecord& p : read_corpus(path)) {
          for (const std::string& w : p.warnings) {
            parse_warnings.push_back(p.record.citation + ": " + w);
          }
          records.push_back(std::move(p.record));
        }
      }
      LoadReport report = load(records, graph);
      report.warnings.insert(report.warnings.begin(), parse_warnings.begin(),
                             parse_warnings.end());
      if (!ingest_out.empty()) save_snapshot(graph, ingest_out);
      emit(out, to_json(report));
      return kOk;
    };
  });

  // stats
  auto* stats = app.add_subcommand("stats", "Node and edge counts plus the decade histogram");
  GraphSource stats_src;
  stats_src.bind(stats);
  stats->callback([&] {
    action = [&] {
      json s = stats_json(stats_src.load(err));
      stats_table(s, err);
      emit(out, s);
      return kOk;
    };
  });

  // retrieve
  auto* retr = app.add_subcommand("retrieve", "Rank candidate cases for a query");
  GraphSource retr_src;
  retr_src.bind(retr);
  std::string retr_text, retr_matter;
  std::vector<std::string> retr_sections;
  std::size_t retr_limit = kDefaultRetrievalLimit;
  retr->add_option("text", retr_text, "Query text")->required();
  retr->add_option("--limit", retr_limit, "Maximum candidates")->check(CLI::PositiveNumber);
  retr->add_option("--matter-type", retr_matter, "Override the classified matter type");
  retr->add_option("--section", retr_sections, "Section key, e.g. CrPC-1973/439 (repeatable)")
      ->allow_extra_args(false);
  retr->callback([&] {
    action = [&] {
      LegalGraph graph = retr_src.load(err);
      Query q{retr_text, std::nullopt, retr_sections, {}};
      if (!retr_matter.empty()) q.matter_type = retr_matter;
      emit(out, to_json(retrieve(q, graph, retr_limit)));
      return kOk;
    };
  });

  // verify
  auto* ver = app.add_subcommand("verify", "Check a claim against the graph");
  GraphSource ver_src;
  ver_src.bind(ver);
  std::vector<std::string> ver_citations, ver_sections;
  std::string ver_rule, ver_procedural, ver_answer;
  bool ver_citations_given = false;
  ver->add_option("--citations", ver_citations, "Comma-separated citations")
      ->allow_extra_args(false)
      ->expected(0, 1);
  ver->add_option("--citation", ver_citations, "A single citation (repeatable)")
      ->allow_extra_args(false);
  ver->add_option("--sections", ver_sections, "Comma-separated section keys or mentions")
      ->expected(0, 1);
  ver->add_option("--rule", ver_rule, "Claimed rule: Rule key or wording");
  ver->add_option("--procedural", ver_procedural, "Claimed transition CURRENT>NEXT");
  ver->add_option("--answer", ver_answer, "Answer text carried in the claim");
  ver->callback([&] {
    ver_citations_given = ver->count("--citations") + ver->count("--citation") > 0;
    action = [&] {
      if (!ver_citations_given) throw UsageError("verify needs --citations");
      LegalGraph graph = ver_src.load(err);
      Claim claim;
      claim.answer_text = ver_answer;
      claim.cited_cases = split_list(ver_citations);
      claim.cited_sections = split_list(ver_sections);
      if (!ver_rule.empty()) claim.claimed_rule = ver_rule;
      if (!ver_procedural.empty()) {
        auto gt = ver_procedural.find('>');
        if (gt == std::string::npos) throw UsageError("--procedural expects CURRENT>NEXT");
        claim.procedural_claim =
            ProceduralClaim{trim(ver_procedural.substr(0, gt)), trim(ver_procedural.substr(gt + 1))};
      }
      VerificationReport report = verify(claim, graph);
      emit(out, to_json(report));
      return report.status == Status::kInvalid ? kVerifyInvalid : kOk;
    };
  });

  // query
  auto* query = app.add_subcommand("query", "Answer a question through the verified pipeline");
  GraphSource query_src;
  query_src.bind(query);
  std::string query_text, query_url, query_mock;
  PipelineConfig config;
  query->add_option("text", query_text, "Question")->required();
  query->add_option("--generator-url", query_url,
                    "Generator endpoint (default: $" + std::string(kGeneratorUrlEnv) + ")");
  query->add_option("--mock", query_mock, "Scripted mock generator JSON");
  query->add_option("--timeout", config.generator_timeout_seconds, "Generator timeout, seconds")
      ->check(CLI::PositiveNumber);
  query->add_option("--max-revisions", config.max_revisions, "Revisions after the first answer")
      ->check(CLI::NonNegativeNumber);
  query->add_option("--limit", config.retrieval_limit, "Retrieval limit")
      ->check(CLI::PositiveNumber);
  query->callback([&] {
    action = [&] {
      std::unique_ptr<Generator> generator = make_generator(query_mock, query_url);
      LegalGraph graph = query_src.load(err);
      PipelineOutput output = run_query(query_text, graph, *generator, config);
      for (const std::string& w : output.warnings) err << "warning: " << w << "\n";
      emit(out, to_json(output));
      return kOk;
    };
  });

  // eval
  auto* ev = app.add_subcommand("eval", "Compute evaluation metrics over run records");
  GraphSource eval_src;
  eval_src.bind(ev);
  std::string eval_path;
  ev->add_option("records", eval_path, "EvalRecord JSON lines")->required();
  ev->callback([&] {
    action = [&] {
      LegalGraph graph;
      if (eval_src.given()) {
        graph = eval_src.load(err);
      } else {
        err << "warning: no graph given; grounding is checked against an empty graph\n";
      }
      std::vector<EvalRecord> records = parse_eval_records(read_file(eval_path));
      MetricReport report = evaluate(records, graph);
      err << format_table(report);
      emit(out, to_json(report));
      return kOk;
    };
  });

  // synth
  auto* syn = app.add_subcommand("synth", "Generate a synthetic corpus with planted faults");
  std::string plan_path, synth_corpus, synth_truth, synth_eval, synth_snapshot;
  std::size_t n_valid = 8, n_invalid = 2;
  syn->add_option("plan", plan_path, "Fault plan JSON")->required();
  syn->add_option("--corpus-out", synth_corpus, "Write records as JSON lines");
  syn->add_option("--truth-out", synth_truth, "Write ground truth JSON");
  syn->add_option("--eval-out", synth_eval, "Write EvalRecord JSON lines for sampled claims");
  syn->add_option("--snapshot", synth_snapshot, "Write the loaded graph snapshot");
  syn->add_option("--valid", n_valid, "Valid claims to sample");
  syn->add_option("--invalid", n_invalid, "Invalid claims to sample");
  syn->callback([&] {
    action = [&] {
      json plan_json = json::parse(read_file(plan_path), nullptr, false);
      if (plan_json.is_discarded()) throw MalformedRecord("plan", "invalid JSON");
      FaultPlan plan = plan_from_json(plan_json);
      SynthCorpus corpus = generate(plan);
      LegalGraph graph;
      LoadReport report = load(corpus.records, graph);
      std::vector<LabeledClaim> claims =
          sample_claims(graph, corpus.truth, n_valid, n_invalid, plan.seed);
      if (!synth_corpus.empty()) {
        std::string lines;
        for (const JudgmentRecord& r : corpus.records) lines += to_json(r).dump() + "\n";
        write_file(synth_corpus, lines);
      }
      if (!synth_truth.empty()) write_file(synth_truth, to_json(corpus.truth).dump(2) + "\n");
      if (!synth_snapshot.empty()) save_snapshot(graph, synth_snapshot);
      if (!synth_eval.empty()) {
        std::string lines;
        for (const EvalRecord& r : synth_eval_records(graph, corpus.truth, claims)) {
          lines += to_json(r).dump() + "\n";
        }
        write_file(synth_eval, lines);
      }
      emit(out, json{{"plan", to_json(plan)},
                     {"records", corpus.records.size()},
                     {"load", to_json(report)},
                     {"truth", to_json(corpus.truth)}});
      return kOk;
    };
  });

  // snapshot save | load
  auto* snap = app.add_subcommand("snapshot", "Save or load canonical graph snapshots");
  snap->require_subcommand(1);
  auto* save = snap->add_subcommand("save", "Ingest corpora and write a snapshot");
  std::vector<std::string> save_corpora;
  std::string save_out;
  save->add_option("corpus", save_corpora, "Corpus file(s)")->required();
  save->add_option("--out", save_out, "Snapshot path")->required();
  save->callback([&] {
    action = [&] {
      LegalGraph graph;
      std::vector<JudgmentRecord> records;
      for (const std::string& path : save_corpora) {
        for (ParsedRecord& p : read_corpus(path)) records.push_back(std::move(p.record));
      }
      LoadReport report = load(records, graph);
      for (const std::string& w : report.warnings) err << "warning: " << w << "\n";
      save_snapshot(graph, save_out);
      emit(out, stats_json(graph));
      return kOk;
    };
  });
  auto* load_cmd = snap->add_subcommand("load", "Validate a snapshot and print its stats");
  std::string load_path;
  load_cmd->add_option("path", load_path, "Snapshot path")->required();
  load_cmd->callback([&] {
    action = [&] {
      emit(out, stats_json(load_snapshot(load_path)));
      return kOk;
    };
  });

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("irac");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const CLI::App* sub = &app; sub != nullptr;) {
      auto subs = sub->get_subcommands();
      sub = subs.empty() ? nullptr : subs.front();
      if (sub != nullptr) target = sub;
    }
    out << target->help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "Run with --help for usage.\n";
    return kUsage;
  }
  if (!action) {
    err << "error: no command\n";
    return kUsage;
  }

  std::string label = app.get_subcommands().empty() ? "irac" : app.get_subcommands().front()->get_name();
  try {
    Timer timer(err, label);
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const GeneratorUnreachable& e) {
    err << "error: " << e.what() << "\n";
    return kGeneratorUnreachable;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace irac::cli

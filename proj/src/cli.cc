//
// Copyright 2026 The foleval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "foleval/cli.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "foleval/corpus.h"
#include "foleval/entailment.h"
#include "foleval/evaluation.h"
#include "foleval/report.h"
#include "foleval/smtlib.h"
#include "foleval/syntax.h"
#include "foleval/wellformedness.h"
#include "json.hpp"

namespace foleval {
namespace {

struct Flags {
  bool closed_world = false;
  double lambda1 = kDefaultLambda1;
  uint64_t seed = 42;
  size_t domain_budget = kDefaultNodeBudget;
  std::string format = "jsonl";
  std::string report;
  size_t jobs = 0;
};

struct Positional {
  std::string formula;
  std::string premises_file;
  std::string query;
  std::string corpus;
  std::string out_dir;
};

int ExitFor(Outcome outcome) {
  switch (outcome) {
    case Outcome::kTrue:
      return kExitTrue;
    case Outcome::kFalse:
      return kExitFalse;
    case Outcome::kUncertain:
      return kExitUncertain;
    case Outcome::kCompileError:
      return kExitCompileError;
    default:
      return kExitEngineError;
  }
}

std::string FormatScore(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string RenderDiagnostic(const Diagnostic& d) {
  return d.code + " [" + std::to_string(d.span.begin) + ", " +
         std::to_string(d.span.end) + "): " + d.message;
}

// One formula per line; blank lines and lines starting with '#' are skipped.
bool ReadPremises(const std::string& path, std::vector<std::string>& premises,
                  std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot open " << path << "\n";
    return false;
  }
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    premises.push_back(line);
  }
  return true;
}

int CmdValidate(const Positional& pos, std::ostream& out) {
  const SwfResult r = CheckSwf(pos.formula);
  out << "score: " << FormatScore(r.score) << " (" << r.passed_count()
      << "/6)\n";
  for (const SwfCriterion& c : r.criteria) {
    out << (c.passed ? "  pass  " : "  FAIL  ") << SwfCriterionName(c.id)
        << "\n";
    for (const Diagnostic& d : c.evidence) {
      out << "        " << RenderDiagnostic(d) << "\n";
    }
  }
  return r.score == 1.0 ? 0 : 1;
}

int CmdParse(const Positional& pos, std::ostream& out) {
  const ParseOutcome r = Parse(pos.formula);
  if (!r.ok()) {
    out << "rejected\n";
    for (const Diagnostic& d : r.errors()) {
      out << "  " << RenderDiagnostic(d) << "\n";
    }
    return kExitCompileError;
  }
  out << Print(r.formula()) << "\n";
  const auto free = FreeVars(r.formula());
  if (!free.empty()) {
    out << "free variables:";
    for (const std::string& v : free) out << " " << v;
    out << "\n";
  }
  for (const Diagnostic& d : r.warnings()) {
    out << "warning: " << RenderDiagnostic(d) << "\n";
  }
  return 0;
}

EntailOptions MakeEntailOptions(const Flags& flags) {
  EntailOptions options;
  options.closed_world = flags.closed_world;
  options.node_budget = flags.domain_budget;
  return options;
}

void PrintAlignment(const KnowledgeBase& kb, std::ostream& out,
                    std::ostream& err) {
  for (const AlignmentRewrite& a : kb.alignment_log) {
    out << "aligned: " << a.original << "/" << a.arity << " -> "
        << a.canonical << "\n";
  }
  for (const std::string& w : kb.warnings) err << "warning: " << w << "\n";
}

int CmdEntail(const Flags& flags, const Positional& pos, std::ostream& out,
              std::ostream& err) {
  std::vector<std::string> premises;
  if (!ReadPremises(pos.premises_file, premises, err)) return kExitEngineError;
  const EntailOptions options = MakeEntailOptions(flags);
  const EntailmentRun run = EntailText(premises, pos.query, options);
  if (!run.problem) {
    out << "Verdict: " << OutcomeName(run.verdict.outcome) << "\n";
    for (const Diagnostic& d : run.verdict.diagnostics) {
      out << "  " << RenderDiagnostic(d) << "\n";
    }
    return ExitFor(run.verdict.outcome);
  }
  PrintAlignment(run.problem->kb, out, err);
  out << Explain(run.verdict, run.problem->kb, run.problem->query, options);
  return ExitFor(run.verdict.outcome);
}

int CmdEnumerate(const Flags& flags, const Positional& pos, std::ostream& out,
                 std::ostream& err) {
  std::vector<std::string> premises;
  if (!ReadPremises(pos.premises_file, premises, err)) return kExitEngineError;
  std::vector<std::string> all = premises;
  all.push_back(pos.query);
  std::vector<Formula> parsed;
  int status = 0;
  for (size_t i = 0; i < all.size(); ++i) {
    const ParseOutcome r = Parse(all[i]);
    if (r.ok()) {
      parsed.push_back(r.formula());
      continue;
    }
    status = kExitCompileError;
    for (const Diagnostic& d : r.errors()) {
      err << (i + 1 == all.size() ? std::string("template")
                                  : "premise " + std::to_string(i + 1))
          << ": " << RenderDiagnostic(d) << "\n";
    }
  }
  if (status != 0) return status;
  const Formula templ = parsed.back();
  parsed.pop_back();
  if (!templ.is_atom()) {
    err << "error: the template must be a single atom\n";
    return kExitCompileError;
  }
  const AlignedProblem problem = AlignPredicates(parsed, templ);
  PrintAlignment(problem.kb, out, err);
  auto result = EnumerateEntities(problem.kb, problem.query.atom(),
                                  MakeEntailOptions(flags));
  if (!result.ok()) {
    err << "error: " << result.status().message() << "\n";
    return kExitCompileError;
  }
  for (const std::string& w : result->warnings) err << "warning: " << w << "\n";
  out << "Answer:";
  if (result->entities.empty()) out << " (none)";
  for (size_t i = 0; i < result->entities.size(); ++i) {
    out << (i ? ", " : " ") << result->entities[i];
  }
  out << "\n";
  return 0;
}

int CmdExportSmt(const Flags& flags, const Positional& pos, std::ostream& out,
                 std::ostream& err) {
  std::vector<std::string> premises;
  if (!ReadPremises(pos.premises_file, premises, err)) return kExitEngineError;
  std::vector<Formula> parsed;
  bool failed = false;
  for (size_t i = 0; i < premises.size(); ++i) {
    const ParseOutcome r = Parse(premises[i]);
    if (r.ok()) {
      parsed.push_back(r.formula());
      continue;
    }
    failed = true;
    for (const Diagnostic& d : r.errors()) {
      err << "premise " << i + 1 << ": " << RenderDiagnostic(d) << "\n";
    }
  }
  const ParseOutcome q = Parse(pos.query);
  if (!q.ok()) {
    failed = true;
    for (const Diagnostic& d : q.errors()) {
      err << "query: " << RenderDiagnostic(d) << "\n";
    }
  }
  if (failed) return kExitCompileError;
  const AlignedProblem problem = AlignPredicates(parsed, q.formula());
  for (const std::string& w : problem.kb.warnings) {
    err << "warning: " << w << "\n";
  }
  out << ExportSmtlib(problem.kb, problem.query, MakeEntailOptions(flags));
  return 0;
}

int CmdEval(const Flags& flags, const Positional& pos, std::ostream& out,
            std::ostream& err) {
  auto corpus = LoadCorpus(pos.corpus);
  if (!corpus.ok()) {
    err << "error: " << corpus.status().message() << "\n";
    return kExitEngineError;
  }
  for (const CorpusDiagnostic& d : corpus->diagnostics) {
    err << "skipped: " << d.message << "\n";
  }
  RunConfig config;
  config.lambda1 = flags.lambda1;
  config.closed_world = flags.closed_world;
  config.seed = flags.seed;
  config.domain_budget = flags.domain_budget;
  config.format = flags.format;
  size_t jobs = flags.jobs;
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  const RunReport report = RunEvaluation(*corpus, config, jobs);
  if (!flags.report.empty()) {
    absl::Status s = WriteReport(report, flags.report);
    if (!s.ok()) {
      err << "error: " << s.message() << "\n";
      return kExitEngineError;
    }
  }
  out << SummaryTable(report,
                      std::filesystem::path(pos.corpus).stem().string());
  return 0;
}

// Uniform integer in [0, bound) from a 64-bit generator, by rejection, so
// the result does not depend on the standard library's distributions.
uint64_t Bounded(std::mt19937_64& rng, uint64_t bound) {
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

int CmdSplit(const Flags& flags, const Positional& pos, std::ostream& out,
             std::ostream& err) {
  auto corpus = LoadCorpus(pos.corpus);
  if (!corpus.ok()) {
    err << "error: " << corpus.status().message() << "\n";
    return kExitEngineError;
  }
  for (const CorpusDiagnostic& d : corpus->diagnostics) {
    err << "skipped: " << d.message << "\n";
  }
  const std::vector<EvalRecord>& records = corpus->records;
  std::vector<size_t> order(records.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::mt19937_64 rng(flags.seed);
  for (size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[Bounded(rng, i)]);
  }
  const size_t n_train = (records.size() * 8 + 5) / 10;

  std::error_code ec;
  std::filesystem::create_directories(pos.out_dir, ec);
  const std::filesystem::path dir(pos.out_dir);
  std::ofstream train(dir / "train.jsonl", std::ios::binary);
  std::ofstream test(dir / "test.jsonl", std::ios::binary);
  if (!train || !test) {
    err << "error: cannot write to " << pos.out_dir << "\n";
    return kExitEngineError;
  }
  nlohmann::ordered_json manifest;
  manifest["source"] = pos.corpus;
  manifest["seed"] = flags.seed;
  manifest["train_fraction"] = 0.8;
  manifest["train"] = nlohmann::ordered_json::array();
  manifest["test"] = nlohmann::ordered_json::array();
  for (size_t k = 0; k < order.size(); ++k) {
    const EvalRecord& r = records[order[k]];
    const bool is_train = k < n_train;
    (is_train ? train : test) << RecordToJson(r) << "\n";
    manifest[is_train ? "train" : "test"].push_back(r.id);
  }
  std::ofstream(dir / "split.json", std::ios::binary) << manifest.dump(2)
                                                      << "\n";
  out << "train: " << n_train << "  test: " << records.size() - n_train
      << "  seed: " << flags.seed << "\n";
  return 0;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app("Evaluation harness for natural-language-to-FOL conversion.",
               "foleval");
  app.fallthrough();
  app.require_subcommand(1);
  Flags flags;
  Positional pos;

  app.add_flag("--closed-world", flags.closed_world,
               "Treat unasserted ground facts of fact predicates as false");
  app.add_option("--lambda1", flags.lambda1,
                 "Weight of the SWF/LE harmonic term in conv_score")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app.add_option("--seed", flags.seed, "Seed for LE sampling and splits")
      ->capture_default_str();
  app.add_option("--domain-budget", flags.domain_budget,
                 "Maximum ground atoms and grounded nodes per problem")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", flags.format, "Corpus format")
      ->check(CLI::IsMember({"jsonl"}))
      ->capture_default_str();
  app.add_option("--report", flags.report, "Write the JSON run report here");
  app.add_option("--jobs", flags.jobs,
                 "Worker threads for eval (0: one per core)")
      ->capture_default_str();

  auto* validate = app.add_subcommand("validate", "Check well-formedness");
  validate->add_option("formula", pos.formula)->required();
  auto* parse = app.add_subcommand("parse", "Parse and pretty-print");
  parse->add_option("formula", pos.formula)->required();
  auto* entail = app.add_subcommand("entail", "Decide entailment");
  entail->add_option("premises", pos.premises_file, "Premises file")
      ->required();
  entail->add_option("query", pos.query)->required();
  auto* enumerate =
      app.add_subcommand("enumerate", "List constants satisfying a template");
  enumerate->add_option("premises", pos.premises_file, "Premises file")
      ->required();
  enumerate->add_option("template", pos.query, "Atom with one variable")
      ->required();
  auto* eval = app.add_subcommand("eval", "Evaluate a corpus");
  eval->add_option("corpus", pos.corpus)->required();
  auto* export_smt =
      app.add_subcommand("export-smt", "Print an SMT-LIB v2 script");
  export_smt->add_option("premises", pos.premises_file, "Premises file")
      ->required();
  export_smt->add_option("query", pos.query)->required();
  auto* split = app.add_subcommand("split", "80/20 train/test split");
  split->add_option("corpus", pos.corpus)->required();
  split->add_option("out_dir", pos.out_dir)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitEngineError;
  }

  if (validate->parsed()) return CmdValidate(pos, out);
  if (parse->parsed()) return CmdParse(pos, out);
  if (entail->parsed()) return CmdEntail(flags, pos, out, err);
  if (enumerate->parsed()) return CmdEnumerate(flags, pos, out, err);
  if (eval->parsed()) return CmdEval(flags, pos, out, err);
  if (export_smt->parsed()) return CmdExportSmt(flags, pos, out, err);
  if (split->parsed()) return CmdSplit(flags, pos, out, err);
  return kExitEngineError;
}

}  // namespace foleval

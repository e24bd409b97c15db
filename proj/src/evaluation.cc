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

#include "foleval/evaluation.h"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

#include "foleval/entailment.h"
#include "foleval/equivalence.h"
#include "foleval/wellformedness.h"

namespace foleval {
namespace {

Label PredictedLabel(Outcome outcome) {
  switch (outcome) {
    case Outcome::kTrue:
      return Label::kTrue;
    case Outcome::kFalse:
      return Label::kFalse;
    case Outcome::kUncertain:
      return Label::kUncertain;
    default:
      return Label::kCompileError;
  }
}

RecordResult EvaluateCandidate(const EvalRecord& record, size_t index,
                               const RunConfig& config) {
  const std::string& query = record.fol_query[index];
  RecordResult r;
  r.id = record.id;
  r.gold_label = record.gold_label;
  r.candidate = index;
  r.candidates = record.fol_query.size();
  r.swf = CheckSwf(query).score;

  if (record.gold_fol_query) {
    LeOptions le_options;
    le_options.seed = config.seed;
    le_options.exhaustive_atom_limit = config.le_exhaustive_atom_limit;
    le_options.sample_count = config.le_sample_count;
    le_options.node_budget = config.domain_budget;
    const LeResult le = LeScore(*record.gold_fol_query, query, le_options);
    if (le.budget_exceeded) r.messages.push_back("le: domain budget exceeded");
    const PseResult pse = PseScoreText(*record.gold_fol_query, query);
    r.conv = ConvScore(r.swf, pse.score, le.score, config.lambda1);
  }

  EntailOptions options;
  options.closed_world = config.closed_world;
  options.node_budget = config.domain_budget;
  const EntailmentRun run = EntailText(record.fol_premises, query, options);
  r.outcome = std::string(OutcomeName(run.verdict.outcome));
  r.predicted_label = PredictedLabel(run.verdict.outcome);
  for (const Diagnostic& d : run.verdict.diagnostics) {
    r.messages.push_back(d.code + ": " + d.message);
  }
  if (!run.verdict.message.empty()) r.messages.push_back(run.verdict.message);
  r.reason =
      ReasonScore(r.predicted_label, r.gold_label, config.reason_weights);
  return r;
}

}  // namespace

RecordResult EvaluateRecord(const EvalRecord& record, const RunConfig& config) {
  std::optional<RecordResult> best;
  for (size_t i = 0; i < record.fol_query.size(); ++i) {
    RecordResult r = EvaluateCandidate(record, i, config);
    const double conv = r.conv ? r.conv->conv : 0.0;
    const double best_conv = best && best->conv ? best->conv->conv : 0.0;
    if (!best || r.reason > best->reason ||
        (r.reason == best->reason && conv > best_conv)) {
      best = std::move(r);
    }
  }
  if (!best) {
    RecordResult r;
    r.id = record.id;
    r.gold_label = record.gold_label;
    r.candidates = 0;
    r.outcome = std::string(OutcomeName(Outcome::kCompileError));
    r.messages.push_back("record has no candidate query");
    r.reason = ReasonScore(r.predicted_label, r.gold_label,
                           config.reason_weights);
    return r;
  }
  return *std::move(best);
}

RunReport RunEvaluation(const Corpus& corpus, const RunConfig& config,
                        size_t jobs) {
  const size_t n = corpus.records.size();
  std::vector<RecordResult> results(n);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < n; i = next++) {
      results[i] = EvaluateRecord(corpus.records[i], config);
    }
  };
  jobs = std::clamp<size_t>(jobs, 1, std::max<size_t>(n, 1));
  std::vector<std::thread> threads;
  for (size_t t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();
  return MakeReport(config, std::move(results), corpus.diagnostics.size());
}

}  // namespace foleval

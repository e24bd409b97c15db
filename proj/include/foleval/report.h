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

#ifndef FOLEVAL_REPORT_H_
#define FOLEVAL_REPORT_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "foleval/grounding.h"
#include "foleval/metrics.h"

namespace foleval {

struct RunConfig {
  double lambda1 = kDefaultLambda1;
  bool closed_world = false;
  uint64_t seed = 42;
  size_t domain_budget = kDefaultNodeBudget;
  size_t le_exhaustive_atom_limit = 20;
  uint64_t le_sample_count = uint64_t{1} << 20;
  ReasonWeights reason_weights;
  std::string format = "jsonl";

  friend bool operator==(const RunConfig& a, const RunConfig& b) {
    return a.lambda1 == b.lambda1 && a.closed_world == b.closed_world &&
           a.seed == b.seed && a.domain_budget == b.domain_budget &&
           a.le_exhaustive_atom_limit == b.le_exhaustive_atom_limit &&
           a.le_sample_count == b.le_sample_count &&
           a.reason_weights.s_max == b.reason_weights.s_max &&
           a.reason_weights.s_mid == b.reason_weights.s_mid &&
           a.reason_weights.s_min == b.reason_weights.s_min &&
           a.format == b.format;
  }
};

struct RecordResult {
  std::string id;
  Label gold_label = Label::kUncertain;
  Label predicted_label = Label::kCompileError;
  // Engine outcome name, e.g. "scale-exceeded".
  std::string outcome;
  // Index of the chosen candidate among the record's fol_query list.
  size_t candidate = 0;
  size_t candidates = 1;
  double swf = 0.0;
  // Present when the record has a gold conversion.
  std::optional<ConvScoreBreakdown> conv;
  double reason = 0.0;
  std::vector<std::string> messages;

  friend bool operator==(const RecordResult&, const RecordResult&) = default;
};

inline constexpr size_t kGoldLabels = 3;
inline constexpr size_t kPredictedLabels = 4;

// Rows are gold labels (true, false, uncertain), columns predicted labels
// (true, false, uncertain, compile_error).
using ConfusionMatrix =
    std::array<std::array<uint64_t, kPredictedLabels>, kGoldLabels>;

struct Aggregates {
  uint64_t records = 0;
  uint64_t skipped_lines = 0;
  uint64_t scale_exceeded = 0;
  // Null when no record contributes.
  std::optional<double> mean_swf;
  std::optional<double> mean_pse;
  std::optional<double> mean_le;
  std::optional<double> mean_conv;
  std::optional<double> mean_reason;
  std::optional<double> accuracy;
  // Accuracy over records whose grounding stayed within budget.
  std::optional<double> accuracy_within_budget;
  std::optional<double> srho;
  bool srho_degenerate = false;

  friend bool operator==(const Aggregates&, const Aggregates&) = default;
};

struct RunReport {
  RunConfig config;
  std::vector<RecordResult> records;
  Aggregates aggregates;
  ConfusionMatrix confusion{};
};

Aggregates ComputeAggregates(const std::vector<RecordResult>& records,
                             uint64_t skipped_lines);
ConfusionMatrix ComputeConfusion(const std::vector<RecordResult>& records);

// Fills aggregates and confusion from the records.
RunReport MakeReport(RunConfig config, std::vector<RecordResult> records,
                     uint64_t skipped_lines);

std::string ReportToJson(const RunReport& report);
// Fails if the stored aggregates or confusion matrix differ from those
// recomputed from the records.
absl::StatusOr<RunReport> ReportFromJson(const std::string& text);

absl::Status WriteReport(const RunReport& report, const std::string& path);
absl::StatusOr<RunReport> LoadReport(const std::string& path);

// Table with Conv-Score, Accuracy, Reason-Score and SRho-Score columns,
// followed by the confusion matrix.
std::string SummaryTable(const RunReport& report, const std::string& row_name);

}  // namespace foleval

#endif  // FOLEVAL_REPORT_H_

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

#ifndef FOLEVAL_CORPUS_H_
#define FOLEVAL_CORPUS_H_

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "foleval/metrics.h"

namespace foleval {

struct EvalRecord {
  std::string id;
  std::vector<std::string> nl_premises;
  std::vector<std::string> fol_premises;
  std::optional<std::string> nl_query;
  // One or more candidate conversions; several are scored best-of-k.
  std::vector<std::string> fol_query;
  std::optional<std::string> gold_fol_query;
  Label gold_label = Label::kUncertain;

  friend bool operator==(const EvalRecord&, const EvalRecord&) = default;
};

struct CorpusDiagnostic {
  size_t line = 0;  // 1-based
  std::string message;

  friend bool operator==(const CorpusDiagnostic&,
                         const CorpusDiagnostic&) = default;
};

struct Corpus {
  std::vector<EvalRecord> records;
  std::vector<CorpusDiagnostic> diagnostics;
};

// Parses one JSON object. Accepts the native field names and the FOLIO
// release's ("premises-FOL", "conclusion-FOL", "label", "example_id", ...).
// Errors name the offending field.
absl::StatusOr<EvalRecord> ParseRecord(std::string_view json_line,
                                       size_t line_number);

// Reads JSONL. Blank lines are ignored; malformed lines are skipped and
// reported as diagnostics.
Corpus ReadCorpus(std::istream& in);
absl::StatusOr<Corpus> LoadCorpus(const std::string& path);

// One JSON object per line in the native schema.
std::string RecordToJson(const EvalRecord& record);

}  // namespace foleval

#endif  // FOLEVAL_CORPUS_H_

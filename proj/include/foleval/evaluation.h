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

#ifndef FOLEVAL_EVALUATION_H_
#define FOLEVAL_EVALUATION_H_

#include <cstdint>

#include "foleval/corpus.h"
#include "foleval/report.h"

namespace foleval {

// Scores one record. Candidates are compared by reason score, then conv
// score; the earliest wins ties.
RecordResult EvaluateRecord(const EvalRecord& record, const RunConfig& config);

// Evaluates records on `jobs` worker threads. Results keep corpus order, so
// the report does not depend on `jobs`.
RunReport RunEvaluation(const Corpus& corpus, const RunConfig& config,
                        size_t jobs = 1);

}  // namespace foleval

#endif  // FOLEVAL_EVALUATION_H_

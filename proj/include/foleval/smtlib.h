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

#ifndef FOLEVAL_SMTLIB_H_
#define FOLEVAL_SMTLIB_H_

#include <string>

#include "foleval/entailment.h"
#include "foleval/formula.h"

namespace foleval {

// Writes premises ∧ ¬query as an SMT-LIB v2 script over an uninterpreted
// sort, with unique names and domain closure over the same constants the
// internal engine grounds over. The script is unsat iff the query is
// entailed. One s-expression per line.
std::string ExportSmtlib(const KnowledgeBase& kb, const Formula& query,
                         const EntailOptions& options = {});

}  // namespace foleval

#endif  // FOLEVAL_SMTLIB_H_

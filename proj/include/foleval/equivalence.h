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

// Logical-equivalence (LE) score: the fraction of interpretations on which
// two formulas take the same truth value.
//
// Free variables are universally closed. The domain is the set of constants
// of both formulas, or {c0, c1} when neither mentions one. Up to
// `exhaustive_atom_limit` relevant ground atoms the full truth table is
// compared; beyond that `sample_count` assignments are drawn uniformly from
// an mt19937_64 stream seeded with `seed`.

#ifndef FOLEVAL_EQUIVALENCE_H_
#define FOLEVAL_EQUIVALENCE_H_

#include <cstdint>
#include <string_view>

#include "foleval/formula.h"
#include "foleval/grounding.h"

namespace foleval {

struct LeOptions {
  uint64_t seed = 42;
  size_t exhaustive_atom_limit = 20;
  uint64_t sample_count = uint64_t{1} << 20;
  size_t node_budget = kDefaultNodeBudget;
};

struct LeResult {
  double score = 0.0;
  bool parse_failed = false;
  bool budget_exceeded = false;
  bool sampled = false;
  // Ground atoms the two formulas depend on.
  size_t atoms = 0;
  // Interpretations compared and how many agreed.
  uint64_t rows = 0;
  uint64_t agreeing = 0;
};

LeResult CompareTruthTables(const Formula& gold, const Formula& pred,
                            const LeOptions& options = {});

// Parses both strings first; a parse failure on either side scores 0.
LeResult LeScore(std::string_view gold, std::string_view pred,
                 const LeOptions& options = {});

}  // namespace foleval

#endif  // FOLEVAL_EQUIVALENCE_H_

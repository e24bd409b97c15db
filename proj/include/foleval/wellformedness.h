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

// Syntactic well-formedness (SWF) scoring over six binary criteria.
//
// Criteria are judged on the token stream of the raw string wherever
// possible, so that strings which fail to parse can still be scored.

#ifndef FOLEVAL_WELLFORMEDNESS_H_
#define FOLEVAL_WELLFORMEDNESS_H_

#include <array>
#include <string_view>
#include <vector>

#include "foleval/syntax.h"

namespace foleval {

enum class SwfCriterionId {
  kVariableCharset,
  kVariableDefined,
  kOperatorValidity,
  kParentheses,
  kComparisonSymbols,
  kSpecialCharacters,
};

inline constexpr std::array<SwfCriterionId, 6> kAllSwfCriteria = {
    SwfCriterionId::kVariableCharset,   SwfCriterionId::kVariableDefined,
    SwfCriterionId::kOperatorValidity,  SwfCriterionId::kParentheses,
    SwfCriterionId::kComparisonSymbols, SwfCriterionId::kSpecialCharacters,
};

std::string_view SwfCriterionName(SwfCriterionId id);

struct SwfCriterion {
  SwfCriterionId id;
  bool passed = true;
  // Nonempty iff !passed.
  std::vector<Diagnostic> evidence;
};

struct SwfResult {
  // One entry per criterion, in kAllSwfCriteria order.
  std::vector<SwfCriterion> criteria;
  // passed / 6.
  double score = 0.0;

  const SwfCriterion& criterion(SwfCriterionId id) const;
  size_t passed_count() const;
};

SwfResult CheckSwf(std::string_view input);

}  // namespace foleval

#endif  // FOLEVAL_WELLFORMEDNESS_H_

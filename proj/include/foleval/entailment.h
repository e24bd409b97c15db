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

// Three-way entailment over a finite grounded domain.
//
// Premises and query are universally closed, grounded over the constants
// they mention (plus a fresh one when there are none) and handed to the SAT
// solver twice: premises ∧ ¬query and premises ∧ query.

#ifndef FOLEVAL_ENTAILMENT_H_
#define FOLEVAL_ENTAILMENT_H_

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "foleval/formula.h"
#include "foleval/grounding.h"
#include "foleval/syntax.h"

namespace foleval {

struct AlignmentRewrite {
  std::string original;
  std::string canonical;
  size_t arity = 0;

  friend bool operator==(const AlignmentRewrite&,
                         const AlignmentRewrite&) = default;
};

struct KnowledgeBase {
  std::vector<Formula> premises;
  Signature signature;
  std::vector<AlignmentRewrite> alignment_log;
  std::vector<std::string> warnings;

  // Takes premises as given, without alignment.
  static KnowledgeBase FromPremises(std::vector<Formula> premises);
};

struct AlignedProblem {
  KnowledgeBase kb;
  Formula query;
};

// Key under which predicate spellings are unified: lowercase, underscores
// removed, a trailing plural "s" or "es" stripped.
std::string PredicateAlignmentKey(std::string_view name);

// Rewrites predicates sharing a key and an arity to the most frequent
// spelling (ties go to the case-insensitively smallest one).
AlignedProblem AlignPredicates(std::span<const Formula> premises,
                               const Formula& query);

enum class Outcome {
  kTrue,
  kFalse,
  kUncertain,
  kCompileError,
  kInconsistent,
  kScaleExceeded,
};

std::string_view OutcomeName(Outcome outcome);

struct Verdict {
  Outcome outcome = Outcome::kCompileError;
  // kTrue / kFalse: indices of premises the solver used.
  std::vector<size_t> premise_indices;
  // kTrue / kFalse: whether the closed-world assumptions were used.
  bool closed_world_used = false;
  // kUncertain: a model of premises ∧ ¬query.
  std::optional<Interpretation> counterexample;
  // kCompileError: the parse diagnostics.
  std::vector<Diagnostic> diagnostics;
  // Error detail for kInconsistent and kScaleExceeded.
  std::string message;

  bool is_error() const {
    return outcome == Outcome::kCompileError ||
           outcome == Outcome::kInconsistent ||
           outcome == Outcome::kScaleExceeded;
  }
};

struct EntailOptions {
  // Treat ground atoms of closed-world predicates that are not asserted as
  // facts as false. The predicates are `closed_world_predicates`, or, when
  // that is empty, every predicate with at least one ground fact.
  bool closed_world = false;
  std::set<std::string> closed_world_predicates;
  size_t node_budget = kDefaultNodeBudget;
};

// The signature entailment is decided over: the knowledge base's, extended
// by the query's symbols, with a fresh constant if the domain is empty.
Signature ProblemSignature(const KnowledgeBase& kb, const Formula& query);

// Predicates the closed-world mode applies to.
std::set<std::string> ClosedWorldPredicates(const KnowledgeBase& kb,
                                            const EntailOptions& options);

Verdict Entail(const KnowledgeBase& kb, const Formula& query,
               const EntailOptions& options = {});

struct EntailmentRun {
  Verdict verdict;
  // Set when every formula parsed.
  std::optional<AlignedProblem> problem;
};

// Parses premises and query, aligns predicates, then decides. Any parse
// failure yields kCompileError with the diagnostics.
EntailmentRun EntailText(std::span<const std::string> premises,
                         std::string_view query,
                         const EntailOptions& options = {});

struct EntityResult {
  std::vector<std::string> entities;
  std::vector<std::string> warnings;
};

// Constants c of the knowledge base for which the template, with its single
// variable replaced by c, is entailed. Fails if the template does not have
// exactly one distinct variable.
absl::StatusOr<EntityResult> EnumerateEntities(
    const KnowledgeBase& kb, const Atom& templ,
    const EntailOptions& options = {});

// Renders a verdict. Supporting premise sets are minimized by greedy
// deletion; counterexamples are listed as their true ground atoms.
std::string Explain(const Verdict& verdict, const KnowledgeBase& kb,
                    const Formula& query, const EntailOptions& options = {});

// The premise subset (and closed-world flag) found by greedy deletion for a
// kTrue or kFalse verdict.
struct SupportSet {
  std::vector<size_t> premises;
  bool closed_world = false;
};
std::optional<SupportSet> MinimalSupport(const Verdict& verdict,
                                         const KnowledgeBase& kb,
                                         const Formula& query,
                                         const EntailOptions& options = {});

}  // namespace foleval

#endif  // FOLEVAL_ENTAILMENT_H_

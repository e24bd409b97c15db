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

// A small CDCL SAT solver: two-watched-literal unit propagation, first-UIP
// clause learning, activity-driven branching with negative default polarity,
// Luby restarts, and solving under assumptions with failed-assumption
// extraction.

#ifndef FOLEVAL_SAT_SOLVER_H_
#define FOLEVAL_SAT_SOLVER_H_

#include <cstdint>
#include <queue>
#include <span>
#include <utility>
#include <vector>

namespace foleval::sat {

class Lit {
 public:
  constexpr Lit() = default;
  static constexpr Lit Pos(int var) { return Lit(2 * var); }
  static constexpr Lit Neg(int var) { return Lit(2 * var + 1); }
  static constexpr Lit Make(int var, bool positive) {
    return positive ? Pos(var) : Neg(var);
  }

  constexpr int var() const { return code_ >> 1; }
  constexpr bool negated() const { return (code_ & 1) != 0; }
  constexpr int code() const { return code_; }
  constexpr Lit operator~() const { return Lit(code_ ^ 1); }

  friend constexpr bool operator==(Lit, Lit) = default;

 private:
  constexpr explicit Lit(int code) : code_(code) {}
  int code_ = -2;
};

enum class Result { kSat, kUnsat };

class Solver {
 public:
  int NewVar();
  int num_vars() const { return static_cast<int>(value_.size()); }

  // Adding an empty or conflicting clause makes the instance unsatisfiable.
  void AddClause(std::vector<Lit> clause);

  Result Solve(std::span<const Lit> assumptions = {});

  // Valid after kSat.
  bool ModelValue(int var) const { return model_[var]; }
  bool ModelValue(Lit lit) const { return model_[lit.var()] != lit.negated(); }

  // After kUnsat: assumptions that alone make the clauses unsatisfiable.
  // Empty when the clauses are unsatisfiable without any assumption.
  const std::vector<Lit>& FailedAssumptions() const { return failed_; }

  uint64_t conflicts() const { return conflicts_; }

 private:
  static constexpr int kNoReason = -1;
  enum class SearchResult { kSat, kUnsat, kRestart };

  int8_t LitValue(Lit l) const {
    const int8_t v = value_[l.var()];
    return l.negated() ? static_cast<int8_t>(-v) : v;
  }
  int DecisionLevel() const { return static_cast<int>(trail_lim_.size()); }

  void Enqueue(Lit l, int reason);
  int Propagate();
  void Analyze(int conflict, std::vector<Lit>& learnt, int& backtrack_level);
  void AnalyzeFinal(Lit p);
  void CancelUntil(int level);
  void Attach(int clause);
  void Bump(int var);
  Lit PickBranch();
  SearchResult Search(std::span<const Lit> assumptions,
                      uint64_t conflict_limit);

  bool ok_ = true;
  std::vector<std::vector<Lit>> clauses_;
  std::vector<std::vector<int>> watches_;
  std::vector<int8_t> value_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<Lit> trail_;
  std::vector<int> trail_lim_;
  size_t qhead_ = 0;
  std::vector<double> activity_;
  double var_inc_ = 1.0;
  std::priority_queue<std::pair<double, int>> order_;
  std::vector<char> seen_;
  std::vector<bool> model_;
  std::vector<Lit> failed_;
  uint64_t conflicts_ = 0;
};

}  // namespace foleval::sat

#endif  // FOLEVAL_SAT_SOLVER_H_

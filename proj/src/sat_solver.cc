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

#include "foleval/sat_solver.h"

#include <algorithm>

namespace foleval::sat {
namespace {

// Luby sequence 1 1 2 1 1 2 4 1 1 2 ...
uint64_t Luby(uint64_t i) {
  uint64_t size = 1;
  uint64_t seq = 0;
  while (size < i + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  uint64_t x = i;
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  return uint64_t{1} << seq;
}

}  // namespace

int Solver::NewVar() {
  const int v = num_vars();
  value_.push_back(0);
  level_.push_back(0);
  reason_.push_back(kNoReason);
  activity_.push_back(0.0);
  seen_.push_back(0);
  watches_.emplace_back();
  watches_.emplace_back();
  order_.emplace(0.0, v);
  return v;
}

void Solver::AddClause(std::vector<Lit> clause) {
  if (!ok_) return;
  CancelUntil(0);
  std::sort(clause.begin(), clause.end(),
            [](Lit a, Lit b) { return a.code() < b.code(); });
  std::vector<Lit> kept;
  for (size_t i = 0; i < clause.size(); ++i) {
    const Lit l = clause[i];
    if (i > 0 && l == clause[i - 1]) continue;
    if (i > 0 && l == ~clause[i - 1]) return;  // tautology
    const int8_t v = LitValue(l);
    if (v > 0) return;
    if (v < 0) continue;
    kept.push_back(l);
  }
  if (kept.empty()) {
    ok_ = false;
    return;
  }
  if (kept.size() == 1) {
    Enqueue(kept[0], kNoReason);
    if (Propagate() != kNoReason) ok_ = false;
    return;
  }
  clauses_.push_back(std::move(kept));
  Attach(static_cast<int>(clauses_.size()) - 1);
}

void Solver::Attach(int clause) {
  const std::vector<Lit>& c = clauses_[clause];
  watches_[c[0].code()].push_back(clause);
  watches_[c[1].code()].push_back(clause);
}

void Solver::Enqueue(Lit l, int reason) {
  value_[l.var()] = l.negated() ? -1 : 1;
  level_[l.var()] = DecisionLevel();
  reason_[l.var()] = reason;
  trail_.push_back(l);
}

int Solver::Propagate() {
  while (qhead_ < trail_.size()) {
    const Lit p = trail_[qhead_++];
    const Lit false_lit = ~p;
    std::vector<int>& ws = watches_[false_lit.code()];
    size_t i = 0;
    size_t j = 0;
    while (i < ws.size()) {
      const int ci = ws[i++];
      std::vector<Lit>& c = clauses_[ci];
      if (c[0] == false_lit) std::swap(c[0], c[1]);
      if (LitValue(c[0]) > 0) {
        ws[j++] = ci;
        continue;
      }
      bool moved = false;
      for (size_t k = 2; k < c.size(); ++k) {
        if (LitValue(c[k]) >= 0) {
          std::swap(c[1], c[k]);
          watches_[c[1].code()].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[j++] = ci;
      if (LitValue(c[0]) < 0) {
        while (i < ws.size()) ws[j++] = ws[i++];
        ws.resize(j);
        qhead_ = trail_.size();
        return ci;
      }
      Enqueue(c[0], ci);
    }
    ws.resize(j);
  }
  return kNoReason;
}

void Solver::Bump(int var) {
  activity_[var] += var_inc_;
  if (activity_[var] > 1e100) {
    for (double& a : activity_) a *= 1e-100;
    var_inc_ *= 1e-100;
    std::priority_queue<std::pair<double, int>> rebuilt;
    for (int v = 0; v < num_vars(); ++v) {
      if (value_[v] == 0) rebuilt.emplace(activity_[v], v);
    }
    order_ = std::move(rebuilt);
    return;
  }
  if (value_[var] == 0) order_.emplace(activity_[var], var);
}

void Solver::Analyze(int conflict, std::vector<Lit>& learnt,
                     int& backtrack_level) {
  learnt.assign(1, Lit());
  int path = 0;
  Lit p;
  bool have_p = false;
  size_t index = trail_.size();
  int confl = conflict;
  do {
    const std::vector<Lit>& c = clauses_[confl];
    for (size_t k = have_p ? 1 : 0; k < c.size(); ++k) {
      const Lit q = c[k];
      const int v = q.var();
      if (seen_[v] || level_[v] == 0) continue;
      Bump(v);
      seen_[v] = 1;
      if (level_[v] >= DecisionLevel()) {
        ++path;
      } else {
        learnt.push_back(q);
      }
    }
    while (!seen_[trail_[--index].var()]) {
    }
    p = trail_[index];
    have_p = true;
    confl = reason_[p.var()];
    seen_[p.var()] = 0;
    --path;
  } while (path > 0);
  learnt[0] = ~p;

  backtrack_level = 0;
  if (learnt.size() > 1) {
    size_t max_i = 1;
    for (size_t k = 2; k < learnt.size(); ++k) {
      if (level_[learnt[k].var()] > level_[learnt[max_i].var()]) max_i = k;
    }
    std::swap(learnt[1], learnt[max_i]);
    backtrack_level = level_[learnt[1].var()];
  }
  for (const Lit l : learnt) seen_[l.var()] = 0;
}

void Solver::AnalyzeFinal(Lit p) {
  // `p` is true and contradicts an assumption.
  failed_.clear();
  failed_.push_back(~p);
  if (DecisionLevel() == 0) return;
  seen_[p.var()] = 1;
  for (size_t i = trail_.size(); i-- > static_cast<size_t>(trail_lim_[0]);) {
    const int x = trail_[i].var();
    if (!seen_[x]) continue;
    if (reason_[x] == kNoReason) {
      failed_.push_back(trail_[i]);
    } else {
      const std::vector<Lit>& c = clauses_[reason_[x]];
      for (size_t k = 1; k < c.size(); ++k) {
        if (level_[c[k].var()] > 0) seen_[c[k].var()] = 1;
      }
    }
    seen_[x] = 0;
  }
  seen_[p.var()] = 0;
}

void Solver::CancelUntil(int level) {
  if (DecisionLevel() <= level) return;
  for (size_t i = trail_.size(); i-- > static_cast<size_t>(trail_lim_[level]);) {
    const int v = trail_[i].var();
    value_[v] = 0;
    reason_[v] = kNoReason;
    order_.emplace(activity_[v], v);
  }
  trail_.resize(static_cast<size_t>(trail_lim_[level]));
  trail_lim_.resize(static_cast<size_t>(level));
  qhead_ = trail_.size();
}

Lit Solver::PickBranch() {
  while (!order_.empty()) {
    const auto [act, v] = order_.top();
    order_.pop();
    if (value_[v] == 0 && act == activity_[v]) return Lit::Neg(v);
  }
  // Stale entries may have hidden a variable; fall back to a scan.
  for (int v = 0; v < num_vars(); ++v) {
    if (value_[v] == 0) return Lit::Neg(v);
  }
  return Lit();
}

Solver::SearchResult Solver::Search(std::span<const Lit> assumptions,
                      uint64_t conflict_limit) {
  uint64_t local_conflicts = 0;
  std::vector<Lit> learnt;
  for (;;) {
    const int confl = Propagate();
    if (confl != kNoReason) {
      ++conflicts_;
      ++local_conflicts;
      if (DecisionLevel() == 0) {
        ok_ = false;
        failed_.clear();
        return SearchResult::kUnsat;
      }
      int bt = 0;
      Analyze(confl, learnt, bt);
      CancelUntil(bt);
      if (learnt.size() == 1) {
        Enqueue(learnt[0], kNoReason);
      } else {
        clauses_.push_back(learnt);
        const int ci = static_cast<int>(clauses_.size()) - 1;
        Attach(ci);
        Enqueue(learnt[0], ci);
      }
      var_inc_ /= 0.95;
      continue;
    }
    if (local_conflicts >= conflict_limit) {
      CancelUntil(0);
      return SearchResult::kRestart;
    }
    Lit next;
    bool have_next = false;
    while (static_cast<size_t>(DecisionLevel()) < assumptions.size()) {
      const Lit a = assumptions[static_cast<size_t>(DecisionLevel())];
      const int8_t v = LitValue(a);
      if (v > 0) {
        trail_lim_.push_back(static_cast<int>(trail_.size()));
      } else if (v < 0) {
        AnalyzeFinal(~a);
        return SearchResult::kUnsat;
      } else {
        next = a;
        have_next = true;
        break;
      }
    }
    if (!have_next) {
      next = PickBranch();
      if (next.var() < 0) {
        model_.assign(value_.size(), false);
        for (size_t v = 0; v < value_.size(); ++v) model_[v] = value_[v] > 0;
        return SearchResult::kSat;
      }
    }
    trail_lim_.push_back(static_cast<int>(trail_.size()));
    Enqueue(next, kNoReason);
  }
}

Result Solver::Solve(std::span<const Lit> assumptions) {
  failed_.clear();
  model_.clear();
  if (!ok_) return Result::kUnsat;
  for (uint64_t restart = 0;; ++restart) {
    const SearchResult r = Search(assumptions, 100 * Luby(restart));
    if (r == SearchResult::kRestart) continue;
    CancelUntil(0);
    return r == SearchResult::kSat ? Result::kSat : Result::kUnsat;
  }
}

}  // namespace foleval::sat

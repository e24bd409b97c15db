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

#include <algorithm>
#include <random>
#include <vector>

#include "foleval/sat_solver.h"
#include "gtest/gtest.h"

namespace foleval::sat {
namespace {

using Clauses = std::vector<std::vector<Lit>>;

bool Satisfies(const Clauses& cnf, uint32_t bits, std::span<const Lit> units) {
  auto value = [&](Lit l) { return (((bits >> l.var()) & 1) != 0) != l.negated(); };
  for (Lit u : units) {
    if (!value(u)) return false;
  }
  return std::all_of(cnf.begin(), cnf.end(), [&](const std::vector<Lit>& c) {
    return std::any_of(c.begin(), c.end(), value);
  });
}

bool BruteForce(const Clauses& cnf, int vars, std::span<const Lit> units) {
  for (uint32_t bits = 0; bits < (1u << vars); ++bits) {
    if (Satisfies(cnf, bits, units)) return true;
  }
  return false;
}

TEST(SolverTest, Trivial) {
  Solver s;
  const int a = s.NewVar();
  const int b = s.NewVar();
  s.AddClause({Lit::Pos(a), Lit::Pos(b)});
  s.AddClause({Lit::Neg(a)});
  ASSERT_EQ(s.Solve(), Result::kSat);
  EXPECT_FALSE(s.ModelValue(a));
  EXPECT_TRUE(s.ModelValue(b));
  const Lit nb[] = {Lit::Neg(b)};
  EXPECT_EQ(s.Solve(nb), Result::kUnsat);
  EXPECT_EQ(s.FailedAssumptions(), std::vector<Lit>{Lit::Neg(b)});
  EXPECT_EQ(s.Solve(), Result::kSat);
}

TEST(SolverTest, EmptyClauseIsUnsat) {
  Solver s;
  s.NewVar();
  s.AddClause({});
  EXPECT_EQ(s.Solve(), Result::kUnsat);
  EXPECT_TRUE(s.FailedAssumptions().empty());
}

TEST(SolverTest, PigeonholeFourIntoThree) {
  Solver s;
  int v[4][3];
  for (auto& row : v) {
    for (int& x : row) x = s.NewVar();
  }
  for (auto& row : v) s.AddClause({Lit::Pos(row[0]), Lit::Pos(row[1]), Lit::Pos(row[2])});
  for (int h = 0; h < 3; ++h) {
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        s.AddClause({Lit::Neg(v[i][h]), Lit::Neg(v[j][h])});
      }
    }
  }
  EXPECT_EQ(s.Solve(), Result::kUnsat);
}

TEST(SolverPropertyTest, AgreesWithBruteForceUnderAssumptions) {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 2000; ++iter) {
    const int vars = 3 + static_cast<int>(rng() % 10);
    const int n_clauses = static_cast<int>(rng() % (5 * vars));
    Clauses cnf;
    Solver s;
    for (int i = 0; i < vars; ++i) s.NewVar();
    for (int c = 0; c < n_clauses; ++c) {
      std::vector<Lit> clause;
      const int width = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < width; ++k) {
        clause.push_back(Lit::Make(static_cast<int>(rng() % vars), rng() & 1));
      }
      cnf.push_back(clause);
      s.AddClause(clause);
    }
    for (int round = 0; round < 3; ++round) {
      std::vector<Lit> assumptions;
      const int n_assume = static_cast<int>(rng() % 4);
      for (int k = 0; k < n_assume; ++k) {
        assumptions.push_back(Lit::Make(static_cast<int>(rng() % vars), rng() & 1));
      }
      const bool expected = BruteForce(cnf, vars, assumptions);
      const Result r = s.Solve(assumptions);
      ASSERT_EQ(r == Result::kSat, expected) << "iteration " << iter;
      if (r == Result::kSat) {
        uint32_t bits = 0;
        for (int v = 0; v < vars; ++v) bits |= s.ModelValue(v) ? 1u << v : 0;
        ASSERT_TRUE(Satisfies(cnf, bits, assumptions));
      } else {
        const std::vector<Lit>& failed = s.FailedAssumptions();
        for (Lit l : failed) {
          ASSERT_NE(std::find(assumptions.begin(), assumptions.end(), l),
                    assumptions.end());
        }
        ASSERT_FALSE(BruteForce(cnf, vars, failed));
      }
    }
  }
}

}  // namespace
}  // namespace foleval::sat

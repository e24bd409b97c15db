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

#include <random>
#include <set>
#include <string>
#include <vector>

#include "foleval/equivalence.h"
#include "foleval/formula.h"
#include "foleval/syntax.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace foleval {
namespace {

TEST(LeTest, Examples) {
  EXPECT_EQ(LeScore("p(a) → q(a)", "¬p(a) ∨ q(a)").score, 1.0);
  EXPECT_EQ(LeScore("p(a)", "p(a)").score, 1.0);
  EXPECT_EQ(LeScore("p(a)", "¬p(a)").score, 0.0);
  LeResult bad = LeScore("p(a)", "p(a) ∧");
  EXPECT_EQ(bad.score, 0.0);
  EXPECT_TRUE(bad.parse_failed);
}

TEST(LeTest, QuantifiersUseTwoFreshConstants) {
  // Over {c0, c1}: ∀x p(x) and ∃x p(x) differ on 2 of 4 rows.
  EXPECT_EQ(LeScore("∀x p(x)", "∃x p(x)").score, 0.5);
  // Free variables are universally closed.
  EXPECT_EQ(LeScore("p(x)", "∀y p(y)").score, 1.0);
}

TEST(LeTest, ArityConflictKeepsAtomsDistinct) {
  LeResult r = LeScore("p(a)", "p(a, a)");
  EXPECT_EQ(r.atoms, 2u);
  EXPECT_EQ(r.score, 0.5);
}

TEST(LeTest, SamplingAboveThresholdIsDeterministic) {
  std::string big = "p0";
  for (int i = 1; i < 24; ++i) big += " ∧ p" + std::to_string(i);
  LeOptions options;
  options.sample_count = 1 << 14;
  LeResult a = LeScore(big, "p0", options);
  LeResult b = LeScore(big, "p0", options);
  EXPECT_TRUE(a.sampled);
  EXPECT_EQ(a.score, b.score);
  EXPECT_EQ(a.rows, uint64_t{1} << 14);
  EXPECT_NEAR(a.score, 0.5, 0.02);
  options.seed = 7;
  EXPECT_NE(LeScore(big, "p0", options).agreeing, a.agreeing);
}

TEST(LePropertyTest, MatchesTruthTableOracle) {
  std::mt19937_64 rng(41);
  testing::GenParams g;
  g.predicates = {{"p", 0}, {"q", 0}, {"r", 0}, {"s", 0}, {"t", 0}};
  g.quantifier_weight = 0;
  g.max_depth = 5;
  for (int i = 0; i < 200; ++i) {
    Formula a = testing::RandomFormula(rng, g);
    Formula b = testing::RandomFormula(rng, g);
    const double expected = testing::TruthTableOracle(a, b);
    const LeResult r = CompareTruthTables(a, b);
    ASSERT_NEAR(r.score, expected, 1e-12) << Print(a) << " vs " << Print(b);
    ASSERT_EQ(CompareTruthTables(b, a).score, r.score);
    ASSERT_EQ(CompareTruthTables(a, a).score, 1.0);
  }
}

TEST(LePropertyTest, KnownEquivalences) {
  const char* pairs[][2] = {
      {"p → q", "¬p ∨ q"},
      {"¬(p ∧ q)", "¬p ∨ ¬q"},
      {"¬(p ∨ q)", "¬p ∧ ¬q"},
      {"¬¬p", "p"},
      {"∀x (s(x) → t(x))", "∀x (¬s(x) ∨ t(x))"},
      {"¬∀x p(x)", "∃x ¬p(x)"},
  };
  for (const auto& pair : pairs) {
    EXPECT_EQ(LeScore(pair[0], pair[1]).score, 1.0) << pair[0];
  }
}

}  // namespace
}  // namespace foleval

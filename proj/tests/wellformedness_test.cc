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
#include <string>
#include <utility>
#include <vector>

#include "foleval/formula.h"
#include "foleval/wellformedness.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace foleval {
namespace {

using Id = SwfCriterionId;

std::vector<Id> Failed(const SwfResult& r) {
  std::vector<Id> out;
  for (const SwfCriterion& c : r.criteria) {
    if (!c.passed) out.push_back(c.id);
  }
  return out;
}

TEST(SwfTest, TableExamplesFailExactlyTheirCriterion) {
  const std::vector<std::pair<std::string, Id>> cases = {
      {"∀x (Blake(x → Building(x)))", Id::kParentheses},
      {"Luxury(x) → Shopping(x)", Id::kVariableDefined},
      {"Wake(hulk) →→ BreakBridge(hulk)", Id::kOperatorValidity},
      {"Code(x) ∧ Mac(x))", Id::kParentheses},
      {"Height(x) > Weight(x)", Id::kComparisonSymbols},
      {"∀x (Reads(x) → Gain?(x))", Id::kSpecialCharacters},
  };
  for (const auto& [text, id] : cases) {
    SwfResult r = CheckSwf(text);
    EXPECT_EQ(Failed(r), std::vector<Id>{id}) << text;
    EXPECT_DOUBLE_EQ(r.score, 5.0 / 6.0) << text;
  }
}

TEST(SwfTest, VariableCharset) {
  SwfResult r = CheckSwf("∀X (p(X))");
  EXPECT_EQ(Failed(r), std::vector<Id>{Id::kVariableCharset});
  EXPECT_EQ(Failed(CheckSwf("∀x1 (p(x1))")), std::vector<Id>{Id::kVariableCharset});
  EXPECT_TRUE(Failed(CheckSwf("∀foo (p(foo))")).empty());
}

TEST(SwfTest, WellFormedScoresOne) {
  for (const char* text :
       {"∀x (p(x) → q(x))", "p(a)", "∀x (enrolled(x, cs102) ⇒ completed(x, cs101))",
        "∃y (Student(y) ∧ ¬Tired(y))", "forall x (p(x) <-> ~q(x))"}) {
    SwfResult r = CheckSwf(text);
    EXPECT_EQ(r.score, 1.0) << text;
    EXPECT_EQ(r.criteria.size(), 6u);
  }
}

TEST(SwfTest, EmptyInputFailsEverything) {
  SwfResult r = CheckSwf("  ");
  EXPECT_EQ(r.score, 0.0);
  EXPECT_EQ(r.passed_count(), 0u);
}

TEST(SwfTest, CriteriaAreIndependent) {
  // Unparseable, yet the comparison and character rules still pass.
  SwfResult r = CheckSwf("p(a) ∧ q(b))");
  EXPECT_TRUE(r.criterion(Id::kComparisonSymbols).passed);
  EXPECT_TRUE(r.criterion(Id::kSpecialCharacters).passed);
  EXPECT_FALSE(r.criterion(Id::kParentheses).passed);
}

TEST(SwfTest, OperatorRules) {
  EXPECT_FALSE(CheckSwf("p(a) ∧").criterion(Id::kOperatorValidity).passed);
  EXPECT_FALSE(CheckSwf("∨ p(a)").criterion(Id::kOperatorValidity).passed);
  EXPECT_FALSE(CheckSwf("p(a) ∧ ∨ q(a)").criterion(Id::kOperatorValidity).passed);
  EXPECT_FALSE(CheckSwf("p(a) ∧ ¬").criterion(Id::kOperatorValidity).passed);
  EXPECT_FALSE(CheckSwf("∀ ∧ p(a)").criterion(Id::kOperatorValidity).passed);
  EXPECT_FALSE(CheckSwf("∀x").criterion(Id::kOperatorValidity).passed);
  EXPECT_TRUE(CheckSwf("¬¬p(a)").criterion(Id::kOperatorValidity).passed);
}

TEST(SwfPropertyTest, GeneratedFormulasScoreOne) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    Formula f = testing::RandomFormula(rng);
    const std::string text = Print(f);
    ASSERT_EQ(CheckSwf(text).score, 1.0) << text;
  }
}

TEST(SwfPropertyTest, EvidenceAndScoreShape) {
  std::mt19937_64 rng(12);
  const std::string alphabet = "()¬∧∨→∀∃,pqxX? =>\"";
  for (int i = 0; i < 3000; ++i) {
    std::string s;
    const size_t len = testing::Uniform(rng, 30);
    for (size_t k = 0; k < len; ++k) {
      s += testing::Coin(rng, 0.1)
               ? static_cast<char>(testing::Uniform(rng, 256))
               : alphabet[testing::Uniform(rng, alphabet.size())];
    }
    SwfResult r = CheckSwf(s);
    ASSERT_EQ(r.criteria.size(), 6u);
    ASSERT_EQ(r.score, static_cast<double>(r.passed_count()) / 6.0);
    for (const SwfCriterion& c : r.criteria) {
      if (c.passed) continue;
      ASSERT_FALSE(c.evidence.empty()) << s;
      for (const Diagnostic& d : c.evidence) {
        ASSERT_LE(d.span.begin, d.span.end);
        ASSERT_LE(d.span.end, s.size());
      }
    }
  }
}

}  // namespace
}  // namespace foleval

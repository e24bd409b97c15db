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

#include <cmath>
#include <random>
#include <vector>

#include "foleval/metrics.h"
#include "foleval/syntax.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace foleval {
namespace {

TEST(TrigramTest, NameNormalization) {
  EXPECT_EQ(TrigramText("HasCert"), "#has cert#");
  EXPECT_EQ(TrigramText("has_cert"), "#has cert#");
  EXPECT_EQ(TrigramText("HTMLParser"), "#html parser#");
  EXPECT_EQ(TrigramText("__a__b_"), "#a b#");
  EXPECT_EQ(TrigramText("Student"), "#student#");
}

TEST(TrigramTest, EmbeddingIsUnitAndDeterministic) {
  TrigramEmbedder e;
  const auto v = e.Embed("Student");
  ASSERT_EQ(v.size(), TrigramEmbedder::kDimension);
  double norm = 0;
  for (double x : v) norm += x * x;
  EXPECT_NEAR(norm, 1.0, 1e-15);
  EXPECT_EQ(v, e.Embed("Student"));
}

TEST(TrigramTest, FrozenCosines) {
  TrigramEmbedder e;
  // 6 shared trigrams out of 7 and 8, no bucket collisions: 6 / sqrt(56).
  EXPECT_NEAR(CosineSimilarity(e.Embed("Student"), e.Embed("Students")),
              0.80178372573727297, 1e-15);
  EXPECT_NEAR(CosineSimilarity(e.Embed("has_cert"), e.Embed("HasCert")), 1.0,
              1e-15);
}

TEST(AssignmentTest, FindsOptimum) {
  const std::vector<std::vector<double>> w = {
      {0.9, 0.8, 0.0}, {0.85, 0.1, 0.0}, {0.0, 0.0, 0.2}};
  EXPECT_EQ(MaxWeightAssignment(w), (std::vector<int>{1, 0, 2}));
  const std::vector<std::vector<double>> wide = {{0.1, 0.7, 0.3}};
  EXPECT_EQ(MaxWeightAssignment(wide), (std::vector<int>{1}));
}

TEST(AssignmentTest, MatchesBruteForce) {
  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 300; ++iter) {
    const size_t rows = 1 + testing::Uniform(rng, 5);
    const size_t cols = 1 + testing::Uniform(rng, 5);
    std::vector<std::vector<double>> w(rows, std::vector<double>(cols));
    for (auto& r : w) {
      for (double& x : r) x = std::uniform_real_distribution<double>(0, 1)(rng);
    }
    const std::vector<int> m = MaxWeightAssignment(w);
    double got = 0;
    std::vector<bool> used(cols);
    for (size_t i = 0; i < rows; ++i) {
      if (m[i] < 0) continue;
      ASSERT_FALSE(used[m[i]]);
      used[m[i]] = true;
      got += w[i][m[i]];
    }
    // Brute force over column permutations.
    std::vector<size_t> perm(std::max(rows, cols));
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    double best = 0;
    do {
      double total = 0;
      for (size_t i = 0; i < rows; ++i) {
        if (perm[i] < cols) total += w[i][perm[i]];
      }
      best = std::max(best, total);
    } while (std::next_permutation(perm.begin(), perm.end()));
    ASSERT_NEAR(got, best, 1e-12);
  }
}

TEST(PseTest, Examples) {
  EXPECT_EQ(PseScoreNames({"Student", "Teach"}, {"Teach", "Student"}), 1.0);
  const double s = PseScoreNames({"Student"}, {"Students"});
  EXPECT_GT(s, 0.8);
  EXPECT_LT(s, 1.0);
  EXPECT_EQ(PseScoreNames({"p"}, {}), 0.0);
  EXPECT_EQ(PseScoreText("p(a)", "p(a) ∧").score, 0.0);
  EXPECT_TRUE(PseScoreText("p(a)", "p(a) ∧").parse_failed);
  EXPECT_EQ(PseScoreText("∀x (p(x) → q(x))", "q(a) ∨ p(b)").score, 1.0);
  // Unmatched predicates on either side count against the score.
  EXPECT_DOUBLE_EQ(PseScoreNames({"alpha"}, {"alpha", "zzz"}), 0.5);
}

TEST(PseTest, Symmetric) {
  std::mt19937_64 rng(62);
  const std::vector<std::string> names = {"Student", "Students", "has_cert",
                                          "HasCert", "Teacher",  "teaches",
                                          "p",       "q",        "Dog"};
  for (int i = 0; i < 300; ++i) {
    std::vector<std::string> g, p;
    for (size_t k = testing::Uniform(rng, 5); k > 0; --k) {
      g.push_back(names[testing::Uniform(rng, names.size())]);
    }
    for (size_t k = testing::Uniform(rng, 5); k > 0; --k) {
      p.push_back(names[testing::Uniform(rng, names.size())]);
    }
    const double a = PseScoreNames(g, p);
    ASSERT_EQ(a, PseScoreNames(p, g));
    ASSERT_GE(a, 0.0);
    ASSERT_LE(a, 1.0);
  }
}

TEST(ConvTest, Examples) {
  EXPECT_EQ(ConvScore(1, 1, 1, 0.5).conv, 1.0);
  EXPECT_EQ(ConvScore(0, 0.6, 0, 0.3).conv, (1 - 0.3) * 0.6);
  EXPECT_NEAR(ConvScore(0.8, 0.7, 0.6, 0.5).conv, 0.69285714285714284, 1e-15);
  ConvScoreBreakdown b = ConvScore(0.8, 0.7, 0.6, 0.25);
  EXPECT_EQ(b.lambda1 + b.lambda2, 1.0);
  EXPECT_EQ(b.swf, 0.8);
}

TEST(ConvTest, MonotoneOnGrid) {
  for (int i = 0; i <= 10; ++i) {
    for (int j = 0; j <= 10; ++j) {
      for (int k = 0; k <= 10; ++k) {
        const double s = i / 10.0, p = j / 10.0, l = k / 10.0;
        const double c = ConvScore(s, p, l, 0.5).conv;
        ASSERT_GE(c, 0.0);
        ASSERT_LE(c, 1.0);
        if (i < 10) {
          ASSERT_GE(ConvScore((i + 1) / 10.0, p, l, 0.5).conv, c);
        }
        if (j < 10) {
          ASSERT_GE(ConvScore(s, (j + 1) / 10.0, l, 0.5).conv, c);
        }
        if (k < 10) {
          ASSERT_GE(ConvScore(s, p, (k + 1) / 10.0, 0.5).conv, c);
        }
      }
    }
  }
}

TEST(ReasonTest, Examples) {
  EXPECT_EQ(ReasonScore(Label::kTrue, Label::kTrue), 1.0);
  EXPECT_EQ(ReasonScore(Label::kFalse, Label::kTrue), 0.5);
  EXPECT_EQ(ReasonScore(Label::kUncertain, Label::kFalse), 0.5);
  EXPECT_EQ(ReasonScore(Label::kCompileError, Label::kFalse), 0.0);
  ReasonWeights w{2.0, 1.0, -1.0};
  EXPECT_EQ(ReasonScore(Label::kCompileError, Label::kTrue, w), -1.0);
}

TEST(LabelTest, Parsing) {
  EXPECT_EQ(ParseLabel("Unknown"), Label::kUncertain);
  EXPECT_EQ(ParseLabel("TRUE"), Label::kTrue);
  EXPECT_EQ(ParseLabel("compile-error"), Label::kCompileError);
  EXPECT_EQ(ParseLabel("maybe"), std::nullopt);
}

TEST(SrhoTest, Examples) {
  const std::vector<double> c = {0.1, 0.2, 0.3};
  EXPECT_EQ(SrhoScore(c, std::vector<double>{0.4, 0.5, 0.6}).value, 1.0);
  EXPECT_EQ(SrhoScore(c, std::vector<double>{0.9, 0.5, 0.1}).value, -1.0);
  // Independent oracle (average-rank Pearson): 3 / sqrt(22.5).
  EXPECT_NEAR(SrhoScore(std::vector<double>{0.2, 0.8, 0.5, 0.9},
                        std::vector<double>{0.5, 0.5, 0.4, 1.0})
                  .value,
              0.63245553203367599, 1e-15);
  SrhoResult d = SrhoScore(c, std::vector<double>{1, 1, 1});
  EXPECT_TRUE(d.degenerate);
  EXPECT_EQ(d.value, 0.0);
  EXPECT_TRUE(SrhoScore(std::vector<double>{1}, std::vector<double>{2}).degenerate);
}

TEST(SrhoTest, AverageRanks) {
  EXPECT_EQ(AverageRanks(std::vector<double>{0.5, 0.5, 0.4, 1.0}),
            (std::vector<double>{2.5, 2.5, 1, 4}));
}

TEST(SrhoPropertyTest, ClosedFormAndRankInvariance) {
  std::mt19937_64 rng(63);
  for (int iter = 0; iter < 500; ++iter) {
    const size_t n = 2 + testing::Uniform(rng, 30);
    std::vector<double> a(n), b(n);
    for (size_t i = 0; i < n; ++i) {
      a[i] = std::uniform_real_distribution<double>(0, 1)(rng);
      b[i] = std::uniform_real_distribution<double>(0, 1)(rng);
    }
    // Tie-free: closed form and Pearson of ranks agree.
    const std::vector<double> ra = AverageRanks(a), rb = AverageRanks(b);
    double d2 = 0, sxy = 0, sxx = 0, syy = 0;
    const double mean = (n + 1) / 2.0;
    for (size_t i = 0; i < n; ++i) {
      d2 += (ra[i] - rb[i]) * (ra[i] - rb[i]);
      sxy += (ra[i] - mean) * (rb[i] - mean);
      sxx += (ra[i] - mean) * (ra[i] - mean);
      syy += (rb[i] - mean) * (rb[i] - mean);
    }
    const double closed = 1 - 6 * d2 / (n * (n * n - 1.0));
    const double r = SrhoScore(a, b).value;
    ASSERT_NEAR(r, closed, 1e-12);
    ASSERT_NEAR(r, sxy / std::sqrt(sxx * syy), 1e-12);
    std::vector<double> ta(n), tb(n);
    for (size_t i = 0; i < n; ++i) {
      ta[i] = std::exp(3 * a[i]) - 7;
      tb[i] = b[i] * b[i] * b[i];
    }
    ASSERT_EQ(SrhoScore(ta, tb).value, r);
    ASSERT_EQ(SrhoScore(a, a).value, 1.0);
    std::vector<double> neg(n);
    for (size_t i = 0; i < n; ++i) neg[i] = -a[i];
    ASSERT_EQ(SrhoScore(a, neg).value, -1.0);
  }
}

}  // namespace
}  // namespace foleval

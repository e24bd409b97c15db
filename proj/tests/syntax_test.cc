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

#include "foleval/formula.h"
#include "foleval/syntax.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace foleval {
namespace {

Term V(const char* n) { return Term::Variable(n); }
Term C(const char* n) { return Term::Constant(n); }

Formula ParseOk(std::string_view text) {
  ParseOutcome r = Parse(text);
  EXPECT_TRUE(r.ok()) << text;
  return r.formula();
}

TEST(ParseTest, CourseRule) {
  Formula expected = Formula::ForAll(
      "x", Formula::Implies(
               Formula::MakeAtom("enrolled", {V("x"), C("cs102")}),
               Formula::MakeAtom("completed", {V("x"), C("cs101")})));
  EXPECT_EQ(ParseOk("∀x (enrolled(x, cs102) → completed(x, cs101))"), expected);
  EXPECT_EQ(ParseOk("∀x (enrolled(x, cs102) ⇒ completed(x, cs101))"), expected);
  EXPECT_EQ(ParseOk("forall x (enrolled(x, cs102) -> completed(x, cs101))"),
            expected);
}

TEST(ParseTest, MinimalAtom) {
  EXPECT_EQ(ParseOk("p(a)"), Formula::MakeAtom("p", {C("a")}));
  EXPECT_EQ(ParseOk("r"), Formula::MakeAtom("r", {}));
}

TEST(ParseTest, ExtraClosingParenSpan) {
  const std::string text = "Code(x) ∧ Mac(x))";
  ParseOutcome r = Parse(text);
  ASSERT_FALSE(r.ok());
  ASSERT_FALSE(r.errors().empty());
  EXPECT_EQ(r.errors()[0].code, "extra_closing_paren");
  EXPECT_EQ(r.errors()[0].span.begin, text.size() - 1);
  EXPECT_EQ(r.errors()[0].span.end, text.size());
}

TEST(ParseTest, Rejections) {
  EXPECT_EQ(Parse("").errors().at(0).code, "empty_input");
  EXPECT_EQ(Parse("p(a) ∧").errors().at(0).code, "missing_operand");
  EXPECT_EQ(Parse("(p(a)").errors().at(0).code, "unbalanced_paren");
  EXPECT_EQ(Parse("p()").errors().at(0).code, "empty_argument_list");
  EXPECT_EQ(Parse("p(f(a))").errors().at(0).code, "function_symbol");
  EXPECT_EQ(Parse("Height(x) > Weight(x)").errors().at(0).code,
            "comparison_symbol");
  EXPECT_EQ(Parse("a = b").errors().at(0).code, "comparison_symbol");
  EXPECT_EQ(Parse("Gain?(x)").errors().at(0).code, "unknown_symbol");
  EXPECT_EQ(Parse("∀ (p(a))").errors().at(0).code, "expected_variable");
}

TEST(ParseTest, AsciiAliasesAndXor) {
  EXPECT_EQ(ParseOk("~p(a) & q(a, b) | r"), ParseOk("¬p(a) ∧ q(a, b) ∨ r"));
  EXPECT_EQ(ParseOk("p(a) <-> r"), ParseOk("p(a) ↔ r"));
  EXPECT_EQ(ParseOk("p(a) ⇔ r"), ParseOk("p(a) ↔ r"));
  EXPECT_EQ(ParseOk("exists y p(y)"), ParseOk("∃y p(y)"));
  EXPECT_EQ(ParseOk("p(a) ⊕ r"),
            Formula::Not(Formula::Iff(Formula::MakeAtom("p", {C("a")}),
                                      Formula::MakeAtom("r", {}))));
}

TEST(ParseTest, Precedence) {
  Formula p = Formula::MakeAtom("p", {});
  Formula q = Formula::MakeAtom("q", {});
  Formula r = Formula::MakeAtom("r", {});
  EXPECT_EQ(ParseOk("¬p ∧ q ∨ r"),
            Formula::Or(Formula::And(Formula::Not(p), q), r));
  EXPECT_EQ(ParseOk("p → q → r"), Formula::Implies(p, Formula::Implies(q, r)));
  EXPECT_EQ(ParseOk("p ∨ q → r ↔ p"),
            Formula::Iff(Formula::Implies(Formula::Or(p, q), r), p));
  EXPECT_EQ(ParseOk("∀x p(x) ∧ q(x, x)"),
            Formula::ForAll("x", Formula::And(
                                     Formula::MakeAtom("p", {V("x")}),
                                     Formula::MakeAtom("q", {V("x"), V("x")}))));
}

TEST(ParseTest, QuotedConstantsLoseQuotes) {
  EXPECT_EQ(ParseOk("has_cert(x, \"word\")"), ParseOk("has_cert(x, word)"));
  EXPECT_EQ(ParseOk("has_cert(x, “word”)"), ParseOk("has_cert(x, word)"));
}

TEST(ParseTest, FreeVariableResolution) {
  ParseOutcome r = Parse("Luxury(x) → Shopping(x)");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(FreeVars(r.formula()), std::set<std::string>{"x"});
  EXPECT_FALSE(r.warnings().empty());
  EXPECT_EQ(r.warnings()[0].code, "free_variable");
  EXPECT_TRUE(FreeVars(ParseOk("∀x (p(x))")).empty());
  EXPECT_EQ(FreeVars(ParseOk("∀x (p(x, y))")), std::set<std::string>{"y"});
  EXPECT_TRUE(FreeVars(ParseOk("p(a)")).empty());
}

TEST(ParseTest, DeepNestingIsRejectedNotCrashing) {
  std::string deep(5000, '(');
  deep += "p";
  deep += std::string(5000, ')');
  ParseOutcome r = Parse(deep);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.errors()[0].code, "nesting_too_deep");
  std::string negs;
  for (int i = 0; i < 5000; ++i) negs += "¬";
  EXPECT_FALSE(Parse(negs + "p").ok());
}

TEST(PrintTest, CanonicalForms) {
  EXPECT_EQ(Print(Formula::MakeAtom("p", {C("a")})), "p(a)");
  EXPECT_EQ(Print(Formula::ForAll(
                "x", Formula::Implies(Formula::MakeAtom("s", {V("x")}),
                                      Formula::MakeAtom("t", {V("x")})))),
            "∀x (s(x) → t(x))");
}

TEST(PrintTest, ConstantsThatLookLikeVariablesAreQuoted) {
  Formula f = Formula::ForAll("x", Formula::MakeAtom("p", {C("x"), V("x")}));
  EXPECT_EQ(ParseOk(Print(f)), f);
  Formula g = Formula::MakeAtom("p", {C("y")});
  EXPECT_EQ(ParseOk(Print(g)), g);
}

TEST(NormalizeTest, Examples) {
  EXPECT_EQ(NormalizeVariables(ParseOk("∀y (p(y))")),
            Formula::ForAll("v0", Formula::MakeAtom("p", {V("v0")})));
  EXPECT_EQ(NormalizeVariables(ParseOk("∀x ∃x (p(x))")),
            Formula::ForAll("v0", Formula::Exists(
                                      "v1", Formula::MakeAtom("p", {V("v1")}))));
}

TEST(NormalizeTest, AvoidsConstantNames) {
  Formula f = Formula::ForAll("x", Formula::MakeAtom("p", {V("x"), C("v0")}));
  Formula n = NormalizeVariables(f);
  EXPECT_EQ(n.var(), "v1");
  EXPECT_EQ(n.body().atom().args[1], C("v0"));
}

TEST(SyntaxPropertyTest, RoundTripThousandFormulas) {
  std::mt19937_64 rng(1);
  testing::GenParams g;
  g.constants.push_back("x");  // needs quoting when printed
  g.constants.push_back("2022");
  for (int i = 0; i < 1000; ++i) {
    Formula f = testing::RandomFormula(rng, g);
    const std::string text = Print(f);
    ParseOutcome r = Parse(text);
    ASSERT_TRUE(r.ok()) << text;
    ASSERT_EQ(r.formula(), f) << text;
  }
}

TEST(SyntaxPropertyTest, ParseIsTotalOnRandomBytes) {
  std::mt19937_64 rng(2);
  const std::string alphabet = "()¬∧∨→↔∀∃,.pqx \"=<>?!&|~-";
  for (int i = 0; i < 10000; ++i) {
    std::string s;
    const size_t len = testing::Uniform(rng, 40);
    for (size_t k = 0; k < len; ++k) {
      if (testing::Coin(rng, 0.5)) {
        s += static_cast<char>(testing::Uniform(rng, 256));
      } else {
        s += alphabet[testing::Uniform(rng, alphabet.size())];
      }
    }
    ParseOutcome r = Parse(s);
    EXPECT_EQ(r, Parse(s));
    for (const Diagnostic& d : r.ok() ? r.warnings() : r.errors()) {
      ASSERT_LE(d.span.begin, d.span.end);
      ASSERT_LE(d.span.end, s.size());
    }
    if (!r.ok()) {
      ASSERT_FALSE(r.errors().empty());
    }
  }
}

TEST(SyntaxPropertyTest, NormalizeIsIdempotent) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    Formula f = testing::RandomFormula(rng);
    Formula n = NormalizeVariables(f);
    EXPECT_EQ(NormalizeVariables(n), n);
  }
}

TEST(SyntaxPropertyTest, NormalizePreservesModelsUpToThreeConstants) {
  std::mt19937_64 rng(4);
  testing::GenParams g;
  g.predicates = {{"p", 1}, {"q", 2}};
  g.max_depth = 4;
  for (size_t n_consts = 1; n_consts <= 3; ++n_consts) {
    g.constants.assign({"a", "b", "c"});
    g.constants.resize(n_consts);
    for (int i = 0; i < 40; ++i) {
      Formula f = testing::RandomFormula(rng, g);
      Formula n = NormalizeVariables(f);
      Signature sig;
      for (const auto& c : g.constants) sig.AddConstant(c);
      for (const auto& [name, arity] : g.predicates) sig.AddPredicate({name, arity});
      auto u = AtomUniverse::Create(sig);
      ASSERT_TRUE(u.ok());
      const uint64_t rows = uint64_t{1} << (*u)->size();
      for (uint64_t bits = 0; bits < rows; ++bits) {
        Interpretation m = testing::FromBits(*u, bits);
        ASSERT_EQ(testing::DirectEval(f, m), testing::DirectEval(n, m))
            << Print(f);
      }
    }
  }
}

}  // namespace
}  // namespace foleval

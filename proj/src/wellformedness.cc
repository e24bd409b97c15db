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

#include "foleval/wellformedness.h"

#include <algorithm>
#include <set>
#include <string>

namespace foleval {
namespace {

bool IsLowercaseWord(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return c >= 'a' && c <= 'z'; });
}

bool IsQuantifier(TokenKind k) {
  return k == TokenKind::kForAll || k == TokenKind::kExists;
}

bool StartsOperand(TokenKind k) {
  return k == TokenKind::kIdent || k == TokenKind::kQuoted ||
         k == TokenKind::kLParen || k == TokenKind::kNot || IsQuantifier(k);
}

// Token stream with the noise that other criteria account for (comparison
// symbols, unknown characters) removed.
struct Stream {
  std::vector<Token> tokens;
  // binder[i] is true when tokens[i] is the variable right after a quantifier.
  std::vector<bool> binder;
  // arg_open[i] is true when tokens[i] opens a predicate's argument list.
  std::vector<bool> arg_open;
};

Stream MakeStream(const std::vector<Token>& all) {
  Stream s;
  for (const Token& t : all) {
    if (t.kind != TokenKind::kComparison && t.kind != TokenKind::kUnknown) {
      s.tokens.push_back(t);
    }
  }
  const size_t n = s.tokens.size();
  s.binder.assign(n, false);
  s.arg_open.assign(n, false);
  for (size_t i = 0; i < n; ++i) {
    if (i > 0 && IsQuantifier(s.tokens[i - 1].kind) &&
        s.tokens[i].kind == TokenKind::kIdent) {
      s.binder[i] = true;
    }
  }
  for (size_t i = 1; i < n; ++i) {
    if (s.tokens[i].kind == TokenKind::kLParen &&
        s.tokens[i - 1].kind == TokenKind::kIdent && !s.binder[i - 1]) {
      s.arg_open[i] = true;
    }
  }
  return s;
}

void Fail(SwfCriterion& c, std::string code, std::string message, Span span) {
  c.passed = false;
  c.evidence.push_back({std::move(code), std::move(message), span});
}

void CheckVariableCharset(const Stream& s, SwfCriterion& c) {
  for (size_t i = 0; i < s.tokens.size(); ++i) {
    if (s.binder[i] && !IsLowercaseWord(s.tokens[i].text)) {
      Fail(c, "variable_charset",
           "variable '" + s.tokens[i].text +
               "' must contain only lowercase letters",
           s.tokens[i].span);
    }
  }
}

void CheckVariableDefined(std::string_view input, const Stream& s,
                          SwfCriterion& c) {
  ParseOutcome parsed = Parse(input);
  if (parsed.ok()) {
    for (const Diagnostic& w : parsed.warnings()) {
      if (w.code == "free_variable") {
        Fail(c, "variable_defined", w.message, w.span);
      }
    }
    return;
  }
  // Without a parse tree the scoping is unknown. Only a string that uses
  // binders yet leaves an argument variable unbound is judged a failure.
  std::set<std::string> bound;
  for (size_t i = 0; i < s.tokens.size(); ++i) {
    if (s.binder[i]) bound.insert(s.tokens[i].text);
  }
  if (bound.empty()) return;
  for (size_t i = 1; i + 1 < s.tokens.size(); ++i) {
    const Token& t = s.tokens[i];
    if (t.kind != TokenKind::kIdent || s.binder[i]) continue;
    const TokenKind before = s.tokens[i - 1].kind;
    const TokenKind after = s.tokens[i + 1].kind;
    const bool in_args = (s.arg_open[i - 1] || before == TokenKind::kComma) &&
                         (after == TokenKind::kComma ||
                          after == TokenKind::kRParen);
    if (in_args && IsConventionalVariableName(t.text) &&
        !bound.contains(t.text)) {
      Fail(c, "variable_defined", "variable '" + t.text + "' is not bound",
           t.span);
    }
  }
}

void CheckOperatorValidity(const Stream& s, SwfCriterion& c) {
  const auto& tk = s.tokens;
  const size_t n = tk.size();
  auto ends_operand = [&](size_t i) {
    return (tk[i].kind == TokenKind::kIdent && !s.binder[i]) ||
           tk[i].kind == TokenKind::kQuoted ||
           tk[i].kind == TokenKind::kRParen;
  };
  for (size_t i = 0; i < n; ++i) {
    const Token& t = tk[i];
    if (IsBinaryConnective(t.kind)) {
      if (i == 0 || !ends_operand(i - 1)) {
        Fail(c, "operator_validity",
             "'" + t.text + "' is missing its left operand", t.span);
      } else if (i + 1 == n || !StartsOperand(tk[i + 1].kind)) {
        Fail(c, "operator_validity",
             "'" + t.text + "' is missing its right operand", t.span);
      }
    } else if (t.kind == TokenKind::kNot) {
      if (i + 1 == n || !StartsOperand(tk[i + 1].kind)) {
        Fail(c, "operator_validity", "'" + t.text + "' is missing its operand",
             t.span);
      }
    } else if (IsQuantifier(t.kind)) {
      if (i + 1 == n || tk[i + 1].kind != TokenKind::kIdent) {
        Fail(c, "operator_validity",
             "quantifier '" + t.text + "' is missing its variable", t.span);
      } else if (i + 2 == n || !StartsOperand(tk[i + 2].kind)) {
        Fail(c, "operator_validity",
             "quantifier '" + t.text + "' is missing its body", t.span);
      }
    }
  }
}

void CheckParentheses(const Stream& s, SwfCriterion& c) {
  const auto& tk = s.tokens;
  std::vector<size_t> open;
  for (size_t i = 0; i < tk.size(); ++i) {
    if (tk[i].kind == TokenKind::kLParen) {
      open.push_back(i);
    } else if (tk[i].kind == TokenKind::kRParen) {
      if (open.empty()) {
        Fail(c, "parentheses", "extra closing parenthesis", tk[i].span);
      } else {
        open.pop_back();
      }
    }
  }
  for (size_t i : open) {
    Fail(c, "parentheses", "unclosed parenthesis", tk[i].span);
  }
  // An argument list may hold only terms; an operator inside one means a
  // closing parenthesis is misplaced.
  for (size_t i = 0; i < tk.size(); ++i) {
    if (!s.arg_open[i]) continue;
    if (i + 1 < tk.size() && tk[i + 1].kind == TokenKind::kRParen) {
      Fail(c, "parentheses", "empty argument list",
           {tk[i].span.begin, tk[i + 1].span.end});
      continue;
    }
    size_t depth = 0;
    for (size_t j = i + 1; j < tk.size(); ++j) {
      const TokenKind k = tk[j].kind;
      if (k == TokenKind::kLParen) ++depth;
      if (k == TokenKind::kRParen) {
        if (depth == 0) break;
        --depth;
      }
      if (IsBinaryConnective(k) || k == TokenKind::kNot || IsQuantifier(k)) {
        Fail(c, "parentheses",
             "misplaced parenthesis: argument list of '" + tk[i - 1].text +
                 "' contains '" + tk[j].text + "'",
             {tk[i].span.begin, tk[j].span.end});
        break;
      }
    }
  }
}

}  // namespace

std::string_view SwfCriterionName(SwfCriterionId id) {
  switch (id) {
    case SwfCriterionId::kVariableCharset:
      return "variable_charset";
    case SwfCriterionId::kVariableDefined:
      return "variable_defined";
    case SwfCriterionId::kOperatorValidity:
      return "operator_validity";
    case SwfCriterionId::kParentheses:
      return "parentheses";
    case SwfCriterionId::kComparisonSymbols:
      return "comparison_symbols";
    case SwfCriterionId::kSpecialCharacters:
      return "special_characters";
  }
  return "";
}

const SwfCriterion& SwfResult::criterion(SwfCriterionId id) const {
  return criteria[static_cast<size_t>(id)];
}

size_t SwfResult::passed_count() const {
  return static_cast<size_t>(std::count_if(
      criteria.begin(), criteria.end(),
      [](const SwfCriterion& c) { return c.passed; }));
}

SwfResult CheckSwf(std::string_view input) {
  SwfResult result;
  for (SwfCriterionId id : kAllSwfCriteria) {
    result.criteria.push_back({id, true, {}});
  }
  auto at = [&result](SwfCriterionId id) -> SwfCriterion& {
    return result.criteria[static_cast<size_t>(id)];
  };

  const std::vector<Token> tokens = Lex(input);
  if (tokens.empty()) {
    for (SwfCriterion& c : result.criteria) {
      Fail(c, "empty_input", "input contains no formula", {0, input.size()});
    }
    return result;
  }

  for (const Token& t : tokens) {
    if (t.kind == TokenKind::kComparison) {
      Fail(at(SwfCriterionId::kComparisonSymbols), "comparison_symbol",
           "contains comparison symbol '" + t.text + "'", t.span);
    } else if (t.kind == TokenKind::kUnknown) {
      Fail(at(SwfCriterionId::kSpecialCharacters), "special_character",
           "contains invalid character '" + t.text + "'", t.span);
    }
  }

  const Stream stream = MakeStream(tokens);
  CheckVariableCharset(stream, at(SwfCriterionId::kVariableCharset));
  CheckVariableDefined(input, stream, at(SwfCriterionId::kVariableDefined));
  CheckOperatorValidity(stream, at(SwfCriterionId::kOperatorValidity));
  CheckParentheses(stream, at(SwfCriterionId::kParentheses));

  result.score = static_cast<double>(result.passed_count()) / 6.0;
  return result;
}

}  // namespace foleval

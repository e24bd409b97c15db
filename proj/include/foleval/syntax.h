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

// Lexing and parsing of FOL text.
//
// Grammar, loosest binding first:
//
//   formula := implies (('↔' | '⊕') formula)?
//   implies := or ('→' implies)?
//   or      := and ('∨' or)?
//   and     := unary ('∧' and)?
//   unary   := '¬' unary | quant IDENT formula | '(' formula ')' | atom
//   atom    := IDENT ('(' term (',' term)* ')')?
//   term    := IDENT | QUOTED
//
// A quantifier body extends as far right as possible. `a ⊕ b` is read as
// ¬(a ↔ b). Offsets in spans are byte offsets into the UTF-8 input.

#ifndef FOLEVAL_SYNTAX_H_
#define FOLEVAL_SYNTAX_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "foleval/formula.h"

namespace foleval {

struct Span {
  size_t begin = 0;
  size_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

struct Diagnostic {
  // Stable machine-readable code, e.g. "extra_closing_paren".
  std::string code;
  std::string message;
  Span span;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

enum class TokenKind {
  kIdent,
  kQuoted,
  kLParen,
  kRParen,
  kComma,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kIff,
  kXor,
  kForAll,
  kExists,
  kComparison,
  kUnknown,
};

struct Token {
  TokenKind kind;
  // Identifier name, quoted-constant contents, or the raw lexeme.
  std::string text;
  Span span;
};

bool IsBinaryConnective(TokenKind kind);

// Never fails: unrecognized bytes become kUnknown tokens (one per UTF-8
// sequence), and an unterminated quote yields a kUnknown for the quote mark.
std::vector<Token> Lex(std::string_view input);

class ParseOutcome {
 public:
  static ParseOutcome Parsed(Formula f, std::vector<Diagnostic> warnings);
  static ParseOutcome Rejected(std::vector<Diagnostic> errors);

  bool ok() const { return formula_.has_value(); }
  // Requires ok().
  const Formula& formula() const { return *formula_; }
  const std::vector<Diagnostic>& warnings() const { return warnings_; }
  // Nonempty iff !ok().
  const std::vector<Diagnostic>& errors() const { return errors_; }

  friend bool operator==(const ParseOutcome&, const ParseOutcome&) = default;

 private:
  std::optional<Formula> formula_;
  std::vector<Diagnostic> warnings_;
  std::vector<Diagnostic> errors_;
};

// Total: any byte sequence yields either a formula or diagnostics.
ParseOutcome Parse(std::string_view input);

// Maximum nesting of parentheses, negations and quantifiers accepted.
inline constexpr size_t kMaxParseDepth = 1000;

}  // namespace foleval

#endif  // FOLEVAL_SYNTAX_H_

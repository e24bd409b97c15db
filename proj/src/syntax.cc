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

#include "foleval/syntax.h"

#include <array>
#include <utility>

namespace foleval {
namespace {

struct Lexeme {
  std::string_view text;
  TokenKind kind;
};

// Longest spellings first so that "<->" wins over "<" and "->".
constexpr std::array<Lexeme, 25> kLexemes = {{
    {"<->", TokenKind::kIff},       {"->", TokenKind::kImplies},
    {"<=", TokenKind::kComparison}, {">=", TokenKind::kComparison},
    {"!=", TokenKind::kComparison}, {"∀", TokenKind::kForAll},
    {"∃", TokenKind::kExists},      {"∧", TokenKind::kAnd},
    {"∨", TokenKind::kOr},          {"¬", TokenKind::kNot},
    {"→", TokenKind::kImplies},     {"⇒", TokenKind::kImplies},
    {"↔", TokenKind::kIff},         {"⇔", TokenKind::kIff},
    {"⊕", TokenKind::kXor},         {"≠", TokenKind::kComparison},
    {"≤", TokenKind::kComparison},  {"≥", TokenKind::kComparison},
    {"&", TokenKind::kAnd},         {"|", TokenKind::kOr},
    {"~", TokenKind::kNot},         {"=", TokenKind::kComparison},
    {"<", TokenKind::kComparison},  {">", TokenKind::kComparison},
    {",", TokenKind::kComma},
}};

bool IsIdentChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Length of the UTF-8 sequence starting at `pos`, or 1 if it is malformed.
size_t Utf8Length(std::string_view s, size_t pos) {
  const auto lead = static_cast<unsigned char>(s[pos]);
  size_t len = 1;
  if ((lead & 0xE0) == 0xC0) {
    len = 2;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4;
  }
  if (pos + len > s.size()) return 1;
  for (size_t i = 1; i < len; ++i) {
    if ((static_cast<unsigned char>(s[pos + i]) & 0xC0) != 0x80) return 1;
  }
  return len;
}

constexpr std::string_view kOpenCurly = "“";
constexpr std::string_view kCloseCurly = "”";

struct ParseError {
  Diagnostic diagnostic;
};

class Parser {
 public:
  Parser(std::string_view input, std::vector<Token> tokens)
      : input_(input), tokens_(std::move(tokens)) {}

  ParseOutcome Run() {
    try {
      if (tokens_.empty()) {
        Fail("empty_input", "input contains no formula", {0, input_.size()});
      }
      Formula f = ParseFormula();
      if (pos_ < tokens_.size()) {
        const Token& t = tokens_[pos_];
        if (t.kind == TokenKind::kRParen) {
          Fail("extra_closing_paren", "extra closing parenthesis", t.span);
        }
        Fail("unexpected_token", "unexpected '" + t.text + "' after formula",
             t.span);
      }
      return ParseOutcome::Parsed(std::move(f), std::move(warnings_));
    } catch (const ParseError& e) {
      return ParseOutcome::Rejected({e.diagnostic});
    }
  }

 private:
  [[noreturn]] void Fail(std::string code, std::string message, Span span) {
    throw ParseError{Diagnostic{std::move(code), std::move(message), span}};
  }

  const Token* Peek() const {
    return pos_ < tokens_.size() ? &tokens_[pos_] : nullptr;
  }

  bool At(TokenKind kind) const {
    return pos_ < tokens_.size() && tokens_[pos_].kind == kind;
  }

  Span EndSpan() const { return {input_.size(), input_.size()}; }

  void Enter(const Token& t) {
    if (++depth_ > kMaxParseDepth) {
      Fail("nesting_too_deep", "formula nesting exceeds parser limit", t.span);
    }
  }

  Formula ParseFormula() {
    Formula lhs = ParseImplies();
    if (At(TokenKind::kIff) || At(TokenKind::kXor)) {
      const Token& op = tokens_[pos_++];
      Enter(op);
      Formula rhs = ParseFormula();
      --depth_;
      Formula iff = Formula::Iff(std::move(lhs), std::move(rhs));
      return op.kind == TokenKind::kXor ? Formula::Not(std::move(iff)) : iff;
    }
    return lhs;
  }

  Formula ParseImplies() {
    Formula lhs = ParseOr();
    if (At(TokenKind::kImplies)) {
      Enter(tokens_[pos_++]);
      Formula rhs = ParseImplies();
      --depth_;
      return Formula::Implies(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Formula ParseOr() {
    Formula lhs = ParseAnd();
    if (At(TokenKind::kOr)) {
      Enter(tokens_[pos_++]);
      Formula rhs = ParseOr();
      --depth_;
      return Formula::Or(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Formula ParseAnd() {
    Formula lhs = ParseUnary();
    if (At(TokenKind::kAnd)) {
      Enter(tokens_[pos_++]);
      Formula rhs = ParseAnd();
      --depth_;
      return Formula::And(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Formula ParseUnary() {
    const Token* t = Peek();
    if (t == nullptr) MissingOperand();
    switch (t->kind) {
      case TokenKind::kNot: {
        ++pos_;
        Enter(*t);
        Formula operand = ParseUnary();
        --depth_;
        return Formula::Not(std::move(operand));
      }
      case TokenKind::kForAll:
      case TokenKind::kExists:
        return ParseQuantifier();
      case TokenKind::kLParen: {
        ++pos_;
        Enter(*t);
        Formula inner = ParseFormula();
        --depth_;
        if (!At(TokenKind::kRParen)) {
          if (pos_ >= tokens_.size()) {
            Fail("unbalanced_paren", "missing closing parenthesis", t->span);
          }
          const Token& bad = tokens_[pos_];
          Fail("unexpected_token", "expected ')' but found '" + bad.text + "'",
               bad.span);
        }
        ++pos_;
        return inner;
      }
      case TokenKind::kIdent:
        return ParseAtom();
      case TokenKind::kQuoted:
        Fail("unexpected_token", "quoted constant used as a formula", t->span);
      default:
        MissingOperand();
    }
  }

  [[noreturn]] void MissingOperand() {
    const Token* prev = pos_ > 0 ? &tokens_[pos_ - 1] : nullptr;
    const Token* cur = Peek();
    if (prev != nullptr &&
        (IsBinaryConnective(prev->kind) || prev->kind == TokenKind::kNot)) {
      Fail("missing_operand", "'" + prev->text + "' is missing an operand",
           prev->span);
    }
    if (cur != nullptr && IsBinaryConnective(cur->kind)) {
      Fail("missing_operand", "'" + cur->text + "' is missing an operand",
           cur->span);
    }
    if (cur == nullptr) {
      Fail("missing_operand", "expected a formula at end of input", EndSpan());
    }
    if (cur->kind == TokenKind::kRParen && prev != nullptr &&
        prev->kind == TokenKind::kLParen) {
      Fail("missing_operand", "empty parentheses", {prev->span.begin,
                                                    cur->span.end});
    }
    Fail("unexpected_token", "expected a formula but found '" + cur->text + "'",
         cur->span);
  }

  Formula ParseQuantifier() {
    const Token& q = tokens_[pos_++];
    Enter(q);
    if (!At(TokenKind::kIdent)) {
      Fail("expected_variable", "quantifier must be followed by a variable",
           pos_ < tokens_.size() ? tokens_[pos_].span : q.span);
    }
    std::string var = tokens_[pos_++].text;
    bound_.push_back(var);
    Formula body = ParseFormula();
    bound_.pop_back();
    --depth_;
    return Formula::Quantified(q.kind == TokenKind::kForAll
                                   ? Formula::Kind::kForAll
                                   : Formula::Kind::kExists,
                               std::move(var), std::move(body));
  }

  Formula ParseAtom() {
    const Token& name = tokens_[pos_++];
    std::vector<Term> args;
    if (!At(TokenKind::kLParen)) {
      return Formula::MakeAtom(name.text, std::move(args));
    }
    const Token& open = tokens_[pos_++];
    if (At(TokenKind::kRParen)) {
      Fail("empty_argument_list",
           "predicate '" + name.text + "' has an empty argument list",
           {open.span.begin, tokens_[pos_].span.end});
    }
    for (;;) {
      args.push_back(ParseTerm());
      if (At(TokenKind::kComma)) {
        ++pos_;
        continue;
      }
      if (At(TokenKind::kRParen)) {
        ++pos_;
        break;
      }
      if (pos_ >= tokens_.size()) {
        Fail("unbalanced_paren", "missing closing parenthesis", open.span);
      }
      const Token& bad = tokens_[pos_];
      Fail("unexpected_token",
           "unexpected '" + bad.text + "' in argument list of '" + name.text +
               "'",
           bad.span);
    }
    return Formula::MakeAtom(name.text, std::move(args));
  }

  Term ParseTerm() {
    const Token* t = Peek();
    if (t == nullptr) {
      Fail("unbalanced_paren", "argument list is not closed", EndSpan());
    }
    if (t->kind == TokenKind::kQuoted) {
      ++pos_;
      return Term::Constant(t->text);
    }
    if (t->kind != TokenKind::kIdent) {
      if (t->kind == TokenKind::kComma || t->kind == TokenKind::kRParen) {
        Fail("missing_argument", "missing argument", t->span);
      }
      Fail("unexpected_token", "expected a term but found '" + t->text + "'",
           t->span);
    }
    ++pos_;
    if (At(TokenKind::kLParen)) {
      Fail("function_symbol",
           "function symbols are not supported: '" + t->text + "'", t->span);
    }
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it) {
      if (*it == t->text) return Term::Variable(t->text);
    }
    if (IsConventionalVariableName(t->text)) {
      warnings_.push_back(Diagnostic{
          "free_variable", "variable '" + t->text + "' is not bound", t->span});
      return Term::Variable(t->text);
    }
    return Term::Constant(t->text);
  }

  std::string_view input_;
  std::vector<Token> tokens_;
  size_t pos_ = 0;
  size_t depth_ = 0;
  std::vector<std::string> bound_;
  std::vector<Diagnostic> warnings_;
};

}  // namespace

bool IsBinaryConnective(TokenKind kind) {
  switch (kind) {
    case TokenKind::kAnd:
    case TokenKind::kOr:
    case TokenKind::kImplies:
    case TokenKind::kIff:
    case TokenKind::kXor:
      return true;
    default:
      return false;
  }
}

std::vector<Token> Lex(std::string_view input) {
  std::vector<Token> tokens;
  size_t pos = 0;
  while (pos < input.size()) {
    const char c = input[pos];
    if (IsSpace(c)) {
      ++pos;
      continue;
    }
    if (c == '(' || c == ')') {
      tokens.push_back({c == '(' ? TokenKind::kLParen : TokenKind::kRParen,
                        std::string(1, c), {pos, pos + 1}});
      ++pos;
      continue;
    }
    if (IsIdentChar(c)) {
      size_t end = pos;
      while (end < input.size() && IsIdentChar(input[end])) ++end;
      std::string text(input.substr(pos, end - pos));
      TokenKind kind = TokenKind::kIdent;
      if (text == "forall") kind = TokenKind::kForAll;
      if (text == "exists") kind = TokenKind::kExists;
      tokens.push_back({kind, std::move(text), {pos, end}});
      pos = end;
      continue;
    }
    const bool curly = input.substr(pos).starts_with(kOpenCurly);
    if (c == '"' || curly) {
      const std::string_view close = curly ? kCloseCurly : "\"";
      const size_t open_len = curly ? kOpenCurly.size() : 1;
      const size_t end = input.find(close, pos + open_len);
      if (end != std::string_view::npos && end > pos + open_len) {
        tokens.push_back(
            {TokenKind::kQuoted,
             std::string(input.substr(pos + open_len, end - pos - open_len)),
             {pos, end + close.size()}});
        pos = end + close.size();
        continue;
      }
      tokens.push_back({TokenKind::kUnknown,
                        std::string(input.substr(pos, open_len)),
                        {pos, pos + open_len}});
      pos += open_len;
      continue;
    }
    bool matched = false;
    for (const Lexeme& lx : kLexemes) {
      if (input.substr(pos).starts_with(lx.text)) {
        tokens.push_back({lx.kind, std::string(lx.text),
                          {pos, pos + lx.text.size()}});
        pos += lx.text.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    const size_t len = Utf8Length(input, pos);
    tokens.push_back({TokenKind::kUnknown, std::string(input.substr(pos, len)),
                      {pos, pos + len}});
    pos += len;
  }
  return tokens;
}

ParseOutcome ParseOutcome::Parsed(Formula f, std::vector<Diagnostic> warnings) {
  ParseOutcome out;
  out.formula_ = std::move(f);
  out.warnings_ = std::move(warnings);
  return out;
}

ParseOutcome ParseOutcome::Rejected(std::vector<Diagnostic> errors) {
  ParseOutcome out;
  out.errors_ = std::move(errors);
  return out;
}

ParseOutcome Parse(std::string_view input) {
  std::vector<Token> tokens = Lex(input);
  std::vector<Diagnostic> errors;
  for (const Token& t : tokens) {
    if (t.kind == TokenKind::kComparison) {
      errors.push_back({"comparison_symbol",
                        "comparison symbol '" + t.text + "' is not allowed",
                        t.span});
    } else if (t.kind == TokenKind::kUnknown) {
      errors.push_back(
          {"unknown_symbol", "unknown symbol '" + t.text + "'", t.span});
    }
  }
  if (!errors.empty()) return ParseOutcome::Rejected(std::move(errors));
  return Parser(input, std::move(tokens)).Run();
}

}  // namespace foleval

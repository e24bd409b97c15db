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

// Abstract syntax for function-free first-order formulas.
//
// A Formula is an immutable tree with shared structure; copying is cheap and
// two formulas compare equal iff they are structurally identical.

#ifndef FOLEVAL_FORMULA_H_
#define FOLEVAL_FORMULA_H_

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace foleval {

struct Term {
  enum class Kind { kVariable, kConstant };

  Kind kind = Kind::kConstant;
  std::string name;

  static Term Variable(std::string name) {
    return Term{Kind::kVariable, std::move(name)};
  }
  static Term Constant(std::string name) {
    return Term{Kind::kConstant, std::move(name)};
  }

  bool is_variable() const { return kind == Kind::kVariable; }

  friend bool operator==(const Term&, const Term&) = default;
};

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  size_t arity() const { return args.size(); }

  friend bool operator==(const Atom&, const Atom&) = default;
};

class Formula {
 public:
  enum class Kind {
    kAtom,
    kNot,
    kAnd,
    kOr,
    kImplies,
    kIff,
    kForAll,
    kExists,
  };

  static Formula MakeAtom(Atom atom);
  static Formula MakeAtom(std::string predicate, std::vector<Term> args);
  static Formula Not(Formula f);
  static Formula And(Formula lhs, Formula rhs);
  static Formula Or(Formula lhs, Formula rhs);
  static Formula Implies(Formula lhs, Formula rhs);
  static Formula Iff(Formula lhs, Formula rhs);
  static Formula ForAll(std::string var, Formula body);
  static Formula Exists(std::string var, Formula body);
  static Formula Binary(Kind kind, Formula lhs, Formula rhs);
  static Formula Quantified(Kind kind, std::string var, Formula body);

  Kind kind() const { return node_->kind; }
  bool is_atom() const { return kind() == Kind::kAtom; }
  bool is_binary() const;
  bool is_quantifier() const {
    return kind() == Kind::kForAll || kind() == Kind::kExists;
  }

  // Valid only for kAtom.
  const Atom& atom() const { return node_->atom; }
  // Operand of kNot, or the body of a quantifier.
  const Formula& child() const { return node_->children[0]; }
  const Formula& body() const { return node_->children[0]; }
  // Operands of binary connectives.
  const Formula& lhs() const { return node_->children[0]; }
  const Formula& rhs() const { return node_->children[1]; }
  // Bound variable of a quantifier.
  const std::string& var() const { return node_->var; }

  // Number of nodes in the tree (atoms count as one).
  size_t size() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    Atom atom;
    std::string var;
    std::vector<Formula> children;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Canonical text: Unicode connectives, binary connectives fully
// parenthesized, quantifiers written `∀x body`.
std::string Print(const Formula& f);

// Variables occurring outside the scope of any binder for their name.
std::set<std::string> FreeVars(const Formula& f);

// Names of all constants, in first-occurrence order.
std::vector<std::string> Constants(const Formula& f);

// Predicate symbols as (name, arity), in first-occurrence order.
std::vector<std::pair<std::string, size_t>> Predicates(const Formula& f);

// Alpha-renames bound variables to v0, v1, ... in pre-order binder order.
// Names already used by constants or free variables are skipped.
Formula NormalizeVariables(const Formula& f);

// Wraps `f` in universal quantifiers for each free variable (sorted order,
// outermost first).
Formula UniversalClosure(const Formula& f);

// Replaces free occurrences of `var` by the constant `constant`.
Formula Substitute(const Formula& f, std::string_view var,
                   std::string_view constant);

// True for the conventional names of free variables (a single letter u-z).
// Unbound identifiers spelled this way are read as variables; every other
// unbound identifier is a constant.
bool IsConventionalVariableName(std::string_view name);

std::string_view ConnectiveSymbol(Formula::Kind kind);

}  // namespace foleval

#endif  // FOLEVAL_FORMULA_H_

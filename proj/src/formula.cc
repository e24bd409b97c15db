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

#include "foleval/formula.h"

#include <algorithm>
#include <map>
#include <utility>

namespace foleval {
namespace {

bool IsBareIdentifier(std::string_view name) {
  if (name.empty() || name == "forall" || name == "exists") return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

// True when printing `f` leaves a quantifier scope open at its right edge,
// so that a following connective would be swallowed by the quantifier.
bool EndsWithOpenScope(const Formula& f) {
  if (f.is_quantifier()) return true;
  if (f.kind() == Formula::Kind::kNot) return EndsWithOpenScope(f.child());
  return false;
}

class Printer {
 public:
  std::string Run(const Formula& f) {
    Emit(f);
    return std::move(out_);
  }

 private:
  void Emit(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::kAtom:
        EmitAtom(f.atom());
        return;
      case Formula::Kind::kNot:
        out_ += "¬";
        Emit(f.child());
        return;
      case Formula::Kind::kForAll:
      case Formula::Kind::kExists:
        out_ += f.kind() == Formula::Kind::kForAll ? "∀" : "∃";
        out_ += f.var();
        out_ += ' ';
        bound_.push_back(f.var());
        Emit(f.body());
        bound_.pop_back();
        return;
      default:
        break;
    }
    out_ += '(';
    if (EndsWithOpenScope(f.lhs())) {
      out_ += '(';
      Emit(f.lhs());
      out_ += ')';
    } else {
      Emit(f.lhs());
    }
    out_ += ' ';
    out_ += ConnectiveSymbol(f.kind());
    out_ += ' ';
    Emit(f.rhs());
    out_ += ')';
  }

  void EmitAtom(const Atom& atom) {
    out_ += atom.predicate;
    if (atom.args.empty()) return;
    out_ += '(';
    for (size_t i = 0; i < atom.args.size(); ++i) {
      if (i > 0) out_ += ", ";
      const Term& t = atom.args[i];
      if (!t.is_variable() && NeedsQuotes(t.name)) {
        out_ += '"';
        out_ += t.name;
        out_ += '"';
      } else {
        out_ += t.name;
      }
    }
    out_ += ')';
  }

  // A constant must be quoted when its bare spelling would be read back as
  // a variable or is not a lexable identifier.
  bool NeedsQuotes(const std::string& name) const {
    if (!IsBareIdentifier(name) || IsConventionalVariableName(name)) {
      return true;
    }
    return std::find(bound_.begin(), bound_.end(), name) != bound_.end();
  }

  std::string out_;
  std::vector<std::string> bound_;
};

void CollectFree(const Formula& f, std::vector<std::string>& bound,
                 std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      for (const Term& t : f.atom().args) {
        if (t.is_variable() &&
            std::find(bound.begin(), bound.end(), t.name) == bound.end()) {
          out.insert(t.name);
        }
      }
      return;
    case Formula::Kind::kForAll:
    case Formula::Kind::kExists:
      bound.push_back(f.var());
      CollectFree(f.body(), bound, out);
      bound.pop_back();
      return;
    case Formula::Kind::kNot:
      CollectFree(f.child(), bound, out);
      return;
    default:
      CollectFree(f.lhs(), bound, out);
      CollectFree(f.rhs(), bound, out);
      return;
  }
}

template <typename Visit>
void ForEachAtom(const Formula& f, Visit&& visit) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      visit(f.atom());
      return;
    case Formula::Kind::kNot:
    case Formula::Kind::kForAll:
    case Formula::Kind::kExists:
      ForEachAtom(f.child(), visit);
      return;
    default:
      ForEachAtom(f.lhs(), visit);
      ForEachAtom(f.rhs(), visit);
      return;
  }
}

class Renamer {
 public:
  explicit Renamer(std::set<std::string> reserved)
      : reserved_(std::move(reserved)) {}

  Formula Rename(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::kAtom: {
        Atom atom = f.atom();
        for (Term& t : atom.args) {
          if (!t.is_variable()) continue;
          auto it = env_.find(t.name);
          if (it != env_.end() && !it->second.empty()) {
            t.name = it->second.back();
          }
        }
        return Formula::MakeAtom(std::move(atom));
      }
      case Formula::Kind::kNot:
        return Formula::Not(Rename(f.child()));
      case Formula::Kind::kForAll:
      case Formula::Kind::kExists: {
        std::string fresh = NextName();
        env_[f.var()].push_back(fresh);
        Formula body = Rename(f.body());
        env_[f.var()].pop_back();
        return Formula::Quantified(f.kind(), std::move(fresh), std::move(body));
      }
      default: {
        Formula lhs = Rename(f.lhs());
        Formula rhs = Rename(f.rhs());
        return Formula::Binary(f.kind(), std::move(lhs), std::move(rhs));
      }
    }
  }

 private:
  std::string NextName() {
    for (;;) {
      std::string name = "v" + std::to_string(counter_++);
      if (!reserved_.contains(name)) return name;
    }
  }

  std::set<std::string> reserved_;
  std::map<std::string, std::vector<std::string>> env_;
  size_t counter_ = 0;
};

Formula SubstituteImpl(const Formula& f, std::string_view var,
                       std::string_view constant) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      Atom atom = f.atom();
      bool changed = false;
      for (Term& t : atom.args) {
        if (t.is_variable() && t.name == var) {
          t = Term::Constant(std::string(constant));
          changed = true;
        }
      }
      return changed ? Formula::MakeAtom(std::move(atom)) : f;
    }
    case Formula::Kind::kNot:
      return Formula::Not(SubstituteImpl(f.child(), var, constant));
    case Formula::Kind::kForAll:
    case Formula::Kind::kExists:
      if (f.var() == var) return f;
      return Formula::Quantified(f.kind(), f.var(),
                                 SubstituteImpl(f.body(), var, constant));
    default:
      return Formula::Binary(f.kind(), SubstituteImpl(f.lhs(), var, constant),
                             SubstituteImpl(f.rhs(), var, constant));
  }
}

}  // namespace

Formula Formula::MakeAtom(Atom atom) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kAtom, std::move(atom), std::string(), {}}));
}

Formula Formula::MakeAtom(std::string predicate, std::vector<Term> args) {
  return MakeAtom(Atom{std::move(predicate), std::move(args)});
}

Formula Formula::Not(Formula f) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kNot, Atom{}, std::string(), {std::move(f)}}));
}

Formula Formula::Binary(Kind kind, Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{kind, Atom{}, std::string(), {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::Quantified(Kind kind, std::string var, Formula body) {
  return Formula(std::make_shared<const Node>(
      Node{kind, Atom{}, std::move(var), {std::move(body)}}));
}

Formula Formula::And(Formula lhs, Formula rhs) {
  return Binary(Kind::kAnd, std::move(lhs), std::move(rhs));
}
Formula Formula::Or(Formula lhs, Formula rhs) {
  return Binary(Kind::kOr, std::move(lhs), std::move(rhs));
}
Formula Formula::Implies(Formula lhs, Formula rhs) {
  return Binary(Kind::kImplies, std::move(lhs), std::move(rhs));
}
Formula Formula::Iff(Formula lhs, Formula rhs) {
  return Binary(Kind::kIff, std::move(lhs), std::move(rhs));
}
Formula Formula::ForAll(std::string var, Formula body) {
  return Quantified(Kind::kForAll, std::move(var), std::move(body));
}
Formula Formula::Exists(std::string var, Formula body) {
  return Quantified(Kind::kExists, std::move(var), std::move(body));
}

bool Formula::is_binary() const {
  switch (kind()) {
    case Kind::kAnd:
    case Kind::kOr:
    case Kind::kImplies:
    case Kind::kIff:
      return true;
    default:
      return false;
  }
}

size_t Formula::size() const {
  size_t n = 1;
  for (const Formula& c : node_->children) n += c.size();
  return n;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const Formula::Node& x = *a.node_;
  const Formula::Node& y = *b.node_;
  return x.kind == y.kind && x.atom == y.atom && x.var == y.var &&
         x.children == y.children;
}

std::string_view ConnectiveSymbol(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::kNot:
      return "¬";
    case Formula::Kind::kAnd:
      return "∧";
    case Formula::Kind::kOr:
      return "∨";
    case Formula::Kind::kImplies:
      return "→";
    case Formula::Kind::kIff:
      return "↔";
    case Formula::Kind::kForAll:
      return "∀";
    case Formula::Kind::kExists:
      return "∃";
    case Formula::Kind::kAtom:
      break;
  }
  return "";
}

std::string Print(const Formula& f) { return Printer().Run(f); }

std::set<std::string> FreeVars(const Formula& f) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  CollectFree(f, bound, out);
  return out;
}

std::vector<std::string> Constants(const Formula& f) {
  std::vector<std::string> out;
  ForEachAtom(f, [&out](const Atom& atom) {
    for (const Term& t : atom.args) {
      if (!t.is_variable() &&
          std::find(out.begin(), out.end(), t.name) == out.end()) {
        out.push_back(t.name);
      }
    }
  });
  return out;
}

std::vector<std::pair<std::string, size_t>> Predicates(const Formula& f) {
  std::vector<std::pair<std::string, size_t>> out;
  ForEachAtom(f, [&out](const Atom& atom) {
    std::pair<std::string, size_t> sym(atom.predicate, atom.arity());
    if (std::find(out.begin(), out.end(), sym) == out.end()) {
      out.push_back(std::move(sym));
    }
  });
  return out;
}

Formula NormalizeVariables(const Formula& f) {
  std::set<std::string> reserved = FreeVars(f);
  for (std::string& c : Constants(f)) reserved.insert(std::move(c));
  return Renamer(std::move(reserved)).Rename(f);
}

Formula UniversalClosure(const Formula& f) {
  std::set<std::string> free = FreeVars(f);
  Formula out = f;
  for (auto it = free.rbegin(); it != free.rend(); ++it) {
    out = Formula::ForAll(*it, std::move(out));
  }
  return out;
}

Formula Substitute(const Formula& f, std::string_view var,
                   std::string_view constant) {
  return SubstituteImpl(f, var, constant);
}

bool IsConventionalVariableName(std::string_view name) {
  return name.size() == 1 && name[0] >= 'u' && name[0] <= 'z';
}

}  // namespace foleval

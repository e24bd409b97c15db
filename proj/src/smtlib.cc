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

#include "foleval/smtlib.h"

#include <map>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "foleval/grounding.h"

namespace foleval {
namespace {

const std::set<std::string_view>& ReservedWords() {
  static const auto* words = new std::set<std::string_view>{
      "!", "_", "as", "BINARY", "DECIMAL", "exists", "HEXADECIMAL", "forall",
      "let", "match", "NUMERAL", "par", "STRING", "Bool", "true", "false",
      "not", "and", "or", "xor", "=>", "=", "distinct", "ite", "Entity",
      "assert", "check-sat", "declare-const", "declare-fun", "declare-sort",
      "define-fun", "define-sort", "exit", "get-model", "get-value", "pop",
      "push", "reset", "set-info", "set-logic", "set-option"};
  return *words;
}

bool IsSimpleSymbol(std::string_view s) {
  if (s.empty() || (s[0] >= '0' && s[0] <= '9')) return false;
  for (char c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') ||
                    std::string_view("~!@$%^&*_-+=<>.?/").find(c) !=
                        std::string_view::npos;
    if (!ok) return false;
  }
  return true;
}

// Maps source names to distinct SMT-LIB symbols. |x| and x denote the same
// symbol, so uniqueness is checked on the unquoted spelling.
class SymbolTable {
 public:
  std::string Fresh(std::string_view name) {
    std::string base;
    for (char c : name) base += (c == '|' || c == '\\') ? '_' : c;
    if (base.empty()) base = "_";
    std::string candidate = base;
    for (int k = 1; ReservedWords().count(candidate) || used_.count(candidate);
         ++k) {
      candidate = base + "_" + std::to_string(k);
    }
    used_.insert(candidate);
    return IsSimpleSymbol(candidate) ? candidate : "|" + candidate + "|";
  }

 private:
  std::set<std::string, std::less<>> used_;
};

class Writer {
 public:
  explicit Writer(const Signature& sig) {
    for (const std::string& c : sig.constants()) consts_[c] = table_.Fresh(c);
    for (const PredicateSymbol& p : sig.predicates()) {
      preds_[{p.name, p.arity}] = table_.Fresh(p.name);
    }
  }

  std::string Constant(const std::string& c) const { return consts_.at(c); }
  std::string Predicate(const PredicateSymbol& p) const {
    return preds_.at({p.name, p.arity});
  }
  // A bound variable name not clashing with any declared symbol.
  std::string Variable(std::string_view name) {
    SymbolTable copy = table_;
    return copy.Fresh(name);
  }

  std::string Term(const foleval::Term& t,
                   const std::map<std::string, std::string>& bound) const {
    if (t.is_variable()) {
      auto it = bound.find(t.name);
      if (it != bound.end()) return it->second;
    }
    return Constant(t.name);
  }

  std::string Expr(const Formula& f, std::map<std::string, std::string> bound) {
    switch (f.kind()) {
      case Formula::Kind::kAtom: {
        std::string head = Predicate({f.atom().predicate, f.atom().arity()});
        if (f.atom().args.empty()) return head;
        std::string out = "(" + head;
        for (const foleval::Term& t : f.atom().args) out += " " + Term(t, bound);
        return out + ")";
      }
      case Formula::Kind::kNot:
        return "(not " + Expr(f.child(), bound) + ")";
      case Formula::Kind::kAnd:
        return "(and " + Expr(f.lhs(), bound) + " " + Expr(f.rhs(), bound) + ")";
      case Formula::Kind::kOr:
        return "(or " + Expr(f.lhs(), bound) + " " + Expr(f.rhs(), bound) + ")";
      case Formula::Kind::kImplies:
        return "(=> " + Expr(f.lhs(), bound) + " " + Expr(f.rhs(), bound) + ")";
      case Formula::Kind::kIff:
        return "(= " + Expr(f.lhs(), bound) + " " + Expr(f.rhs(), bound) + ")";
      case Formula::Kind::kForAll:
      case Formula::Kind::kExists: {
        std::string v = Variable(f.var());
        bound[f.var()] = v;
        return std::string(f.kind() == Formula::Kind::kForAll ? "(forall (("
                                                              : "(exists ((") +
               v + " Entity)) " + Expr(f.body(), bound) + ")";
      }
    }
    return "";
  }

 private:
  SymbolTable table_;
  std::map<std::string, std::string> consts_;
  std::map<std::pair<std::string, size_t>, std::string> preds_;
};

}  // namespace

std::string ExportSmtlib(const KnowledgeBase& kb, const Formula& query,
                         const EntailOptions& options) {
  const Signature sig = ProblemSignature(kb, query);
  const std::set<std::string> closed =
      options.closed_world ? ClosedWorldPredicates(kb, options)
                           : std::set<std::string>{};
  Writer w(sig);

  std::string out = "(set-logic UF)\n(declare-sort Entity 0)\n";
  for (const std::string& c : sig.constants()) {
    out += "(declare-const " + w.Constant(c) + " Entity)\n";
  }
  if (sig.constants().size() >= 2) {
    out += "(assert (distinct";
    for (const std::string& c : sig.constants()) out += " " + w.Constant(c);
    out += "))\n";
  }
  const std::string e = w.Variable("e");
  out += "(assert (forall ((" + e + " Entity)) ";
  if (sig.constants().size() == 1) {
    out += "(= " + e + " " + w.Constant(sig.constants()[0]) + ")";
  } else {
    out += "(or";
    for (const std::string& c : sig.constants()) {
      out += " (= " + e + " " + w.Constant(c) + ")";
    }
    out += ")";
  }
  out += "))\n";

  for (const PredicateSymbol& p : sig.predicates()) {
    out += "(declare-fun " + w.Predicate(p) + " (";
    for (size_t i = 0; i < p.arity; ++i) out += i ? " Entity" : "Entity";
    out += ") Bool)\n";
  }
  std::set<GroundAtom> facts;
  for (const Formula& p : kb.premises) {
    out += "(assert " + w.Expr(UniversalClosure(p), {}) + ")\n";
    if (!p.is_atom()) continue;
    GroundAtom a{p.atom().predicate, {}};
    bool ground = true;
    for (const Term& t : p.atom().args) {
      ground = ground && !t.is_variable();
      a.args.push_back(t.name);
    }
    if (ground) facts.insert(a);
  }
  if (!closed.empty()) {
    for (const PredicateSymbol& p : sig.predicates()) {
      if (!closed.count(p.name)) continue;
      const size_t n = sig.constants().size();
      std::vector<size_t> idx(p.arity, 0);
      while (true) {
        GroundAtom a{p.name, {}};
        for (size_t i : idx) a.args.push_back(sig.constants()[i]);
        if (!facts.count(a)) {
          std::string atom = w.Predicate(p);
          if (p.arity > 0) {
            atom = "(" + atom;
            for (const std::string& c : a.args) atom += " " + w.Constant(c);
            atom += ")";
          }
          out += "(assert (not " + atom + "))\n";
        }
        size_t k = p.arity;
        while (k > 0 && ++idx[k - 1] == n) idx[--k] = 0;
        if (k == 0) break;
      }
    }
  }
  out += "(assert (not " + w.Expr(UniversalClosure(query), {}) + "))\n";
  out += "(check-sat)\n";
  return out;
}

}  // namespace foleval

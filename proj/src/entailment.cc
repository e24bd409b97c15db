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

#include "foleval/entailment.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <tuple>
#include <utility>

#include "absl/status/status.h"
#include "foleval/circuit.h"
#include "foleval/sat_solver.h"

namespace foleval {
namespace {

using sat::Lit;

Formula RenamePredicates(
    const Formula& f,
    const std::map<std::pair<std::string, size_t>, std::string>& renames) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      auto it = renames.find({f.atom().predicate, f.atom().arity()});
      if (it == renames.end()) return f;
      return Formula::MakeAtom(it->second, f.atom().args);
    }
    case Formula::Kind::kNot:
      return Formula::Not(RenamePredicates(f.child(), renames));
    case Formula::Kind::kForAll:
    case Formula::Kind::kExists:
      return Formula::Quantified(f.kind(), f.var(),
                                 RenamePredicates(f.body(), renames));
    default:
      return Formula::Binary(f.kind(), RenamePredicates(f.lhs(), renames),
                             RenamePredicates(f.rhs(), renames));
  }
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

std::vector<std::string> ArityConflictWarnings(
    std::span<const Formula> formulas) {
  std::map<std::string, std::set<size_t>> arities;
  for (const Formula& f : formulas) {
    for (const auto& [name, arity] : Predicates(f)) {
      arities[PredicateAlignmentKey(name)].insert(arity);
    }
  }
  std::vector<std::string> warnings;
  for (const auto& [key, set] : arities) {
    if (set.size() < 2) continue;
    std::string msg = "predicate '" + key + "' is used with arities";
    bool first = true;
    for (size_t a : set) {
      msg += first ? " " : ", ";
      msg += std::to_string(a);
      first = false;
    }
    msg += "; kept distinct";
    warnings.push_back(std::move(msg));
  }
  return warnings;
}

// A grounded knowledge base loaded into a SAT solver. Premise i is enforced
// under selector literal i; the closed-world negations share one selector.
class GroundProblem {
 public:
  static absl::StatusOr<std::unique_ptr<GroundProblem>> Create(
      const KnowledgeBase& kb, const Signature& sig,
      const EntailOptions& options) {
    auto universe = AtomUniverse::Create(sig, options.node_budget);
    if (!universe.ok()) return universe.status();
    std::unique_ptr<GroundProblem> p(
        new GroundProblem(*universe, options.node_budget));
    for (const Formula& premise : kb.premises) {
      auto root = p->circuit_.Add(UniversalClosure(premise));
      if (!root.ok()) return root.status();
      p->premise_roots_.push_back(*root);
    }
    if (options.closed_world) {
      p->closed_preds_ = ClosedWorldPredicates(kb, options);
      for (const Formula& premise : kb.premises) {
        if (!premise.is_atom()) continue;
        GroundAtom fact{premise.atom().predicate, {}};
        bool ground = true;
        for (const Term& t : premise.atom().args) {
          if (t.is_variable()) ground = false;
          fact.args.push_back(t.name);
        }
        if (ground) {
          if (auto idx = (*universe)->IndexOf(fact)) p->facts_.insert(*idx);
        }
      }
      p->closed_world_ = true;
    }
    return p;
  }

  // Encodes a closed query and returns its literal.
  absl::StatusOr<Lit> EncodeQuery(const Formula& closed) {
    auto root = circuit_.Add(closed);
    if (!root.ok()) return root.status();
    query_roots_.push_back(*root);
    return Encode(*root);
  }

  size_t num_premises() const { return premise_roots_.size(); }
  bool closed_world() const { return closed_world_; }
  const GroundCircuit& circuit() const { return circuit_; }
  GroundCircuit::NodeId query_root(size_t i) const { return query_roots_[i]; }

  Lit PremiseSelector(size_t i) {
    EnsurePremisesEncoded();
    return selectors_[i];
  }

  Lit ClosedWorldSelector() {
    EnsurePremisesEncoded();
    EnsureClosedWorldEncoded();
    return *cw_selector_;
  }

  // Closed-world negated atoms (universe indices) among the circuit's atoms.
  std::vector<size_t> ClosedWorldAtoms() const {
    std::vector<size_t> out;
    const AtomUniverse& u = circuit_.universe();
    for (size_t local = 0; local < circuit_.num_atoms(); ++local) {
      size_t idx = circuit_.universe_index(local);
      if (facts_.count(idx)) continue;
      if (closed_preds_.count(u.atom(idx).predicate)) out.push_back(idx);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  sat::Result Check(std::span<const size_t> premises, bool use_closed_world,
                    Lit query) {
    std::vector<Lit> assumptions;
    for (size_t i : premises) assumptions.push_back(PremiseSelector(i));
    if (use_closed_world) assumptions.push_back(ClosedWorldSelector());
    assumptions.push_back(query);
    return solver_.Solve(assumptions);
  }

  sat::Result CheckAll(Lit query) {
    std::vector<size_t> all(num_premises());
    for (size_t i = 0; i < all.size(); ++i) all[i] = i;
    return Check(all, closed_world_, query);
  }

  // After an unsat check: premises and closed-world flag in the core.
  void Core(std::vector<size_t>& premises, bool& closed_world) const {
    premises.clear();
    closed_world = false;
    for (Lit l : solver_.FailedAssumptions()) {
      for (size_t i = 0; i < selectors_.size(); ++i) {
        if (selectors_[i] == l) premises.push_back(i);
      }
      if (cw_selector_ && *cw_selector_ == l) closed_world = true;
    }
    std::sort(premises.begin(), premises.end());
    premises.erase(std::unique(premises.begin(), premises.end()),
                   premises.end());
  }

  // After a sat check: the model restricted to ground atoms.
  Interpretation Model() const {
    Interpretation interp(universe_);
    for (size_t local = 0; local < atom_vars_.size(); ++local) {
      if (atom_vars_[local] >= 0 && solver_.ModelValue(atom_vars_[local])) {
        interp.Set(circuit_.universe_index(local), true);
      }
    }
    return interp;
  }

  // Greedily turns true atoms false while the premises stay true and the
  // query stays false. Skipped on large circuits.
  Interpretation Minimize(Interpretation m, GroundCircuit::NodeId query) const {
    constexpr size_t kWorkLimit = 20'000'000;
    const size_t n = circuit_.num_atoms();
    if (circuit_.nodes().size() * n > kWorkLimit) return m;
    std::vector<uint64_t> words(n);
    for (size_t a = 0; a < n; ++a) {
      words[a] = m.value(circuit_.universe_index(a)) ? 1 : 0;
    }
    for (size_t a = 0; a < n; ++a) {
      if (!words[a]) continue;
      words[a] = 0;
      const std::vector<uint64_t> values = circuit_.EvalWords(words);
      bool ok = (values[query] & 1) == 0;
      for (auto root : premise_roots_) ok = ok && (values[root] & 1) != 0;
      if (ok) {
        m.Set(circuit_.universe_index(a), false);
      } else {
        words[a] = 1;
      }
    }
    return m;
  }

 private:
  GroundProblem(std::shared_ptr<const AtomUniverse> universe, size_t budget)
      : universe_(universe), circuit_(universe, budget) {}

  void EnsurePremisesEncoded() {
    while (selectors_.size() < premise_roots_.size()) {
      Lit root = Encode(premise_roots_[selectors_.size()]);
      Lit sel = Lit::Pos(solver_.NewVar());
      solver_.AddClause({~sel, root});
      selectors_.push_back(sel);
    }
  }

  // Atoms may be added by later queries, so this runs before every check.
  void EnsureClosedWorldEncoded() {
    if (!cw_selector_) cw_selector_ = Lit::Pos(solver_.NewVar());
    for (size_t idx : ClosedWorldAtoms()) {
      if (!cw_encoded_.insert(idx).second) continue;
      Lit atom = Encode(circuit_.AtomNode(idx));
      solver_.AddClause({~*cw_selector_, ~atom});
    }
  }

  Lit AtomLit(uint32_t local) {
    if (atom_vars_.size() <= local) atom_vars_.resize(local + 1, -1);
    if (atom_vars_[local] < 0) atom_vars_[local] = solver_.NewVar();
    return Lit::Pos(atom_vars_[local]);
  }

  // Tseitin encoding of every node reachable from `root`.
  Lit Encode(GroundCircuit::NodeId root) {
    const auto& nodes = circuit_.nodes();
    if (node_lits_.size() < nodes.size()) node_lits_.resize(nodes.size());
    if (node_done_.size() < nodes.size()) node_done_.resize(nodes.size());
    std::vector<GroundCircuit::NodeId> pending;
    std::vector<GroundCircuit::NodeId> stack{root};
    while (!stack.empty()) {
      auto id = stack.back();
      stack.pop_back();
      if (node_done_[id] || node_seen_.count(id)) continue;
      node_seen_.insert(id);
      pending.push_back(id);
      const auto& n = nodes[id];
      if (n.op == GroundCircuit::Op::kAtom) continue;
      stack.push_back(n.a);
      if (n.op != GroundCircuit::Op::kNot) stack.push_back(n.b);
    }
    // Children always have smaller ids than their parents.
    std::sort(pending.begin(), pending.end());
    for (auto id : pending) {
      node_seen_.erase(id);
      const auto& n = nodes[id];
      Lit x;
      switch (n.op) {
        case GroundCircuit::Op::kAtom:
          x = AtomLit(n.a);
          break;
        case GroundCircuit::Op::kNot:
          x = ~node_lits_[n.a];
          break;
        default: {
          x = Lit::Pos(solver_.NewVar());
          Lit a = node_lits_[n.a];
          Lit b = node_lits_[n.b];
          switch (n.op) {
            case GroundCircuit::Op::kAnd:
              solver_.AddClause({~x, a});
              solver_.AddClause({~x, b});
              solver_.AddClause({x, ~a, ~b});
              break;
            case GroundCircuit::Op::kOr:
              solver_.AddClause({~x, a, b});
              solver_.AddClause({x, ~a});
              solver_.AddClause({x, ~b});
              break;
            case GroundCircuit::Op::kImplies:
              solver_.AddClause({~x, ~a, b});
              solver_.AddClause({x, a});
              solver_.AddClause({x, ~b});
              break;
            default:
              solver_.AddClause({~x, ~a, b});
              solver_.AddClause({~x, a, ~b});
              solver_.AddClause({x, a, b});
              solver_.AddClause({x, ~a, ~b});
              break;
          }
        }
      }
      node_lits_[id] = x;
      node_done_[id] = true;
    }
    return node_lits_[root];
  }

  std::shared_ptr<const AtomUniverse> universe_;
  GroundCircuit circuit_;
  sat::Solver solver_;
  std::vector<GroundCircuit::NodeId> premise_roots_;
  std::vector<GroundCircuit::NodeId> query_roots_;
  std::vector<Lit> selectors_;
  std::optional<Lit> cw_selector_;
  bool closed_world_ = false;
  std::set<std::string> closed_preds_;
  std::set<size_t> facts_;
  std::set<size_t> cw_encoded_;
  std::vector<int> atom_vars_;
  std::vector<Lit> node_lits_;
  std::vector<bool> node_done_;
  std::set<GroundCircuit::NodeId> node_seen_;
};

Verdict ScaleExceeded(const absl::Status& status) {
  Verdict v;
  v.outcome = status.code() == absl::StatusCode::kResourceExhausted
                  ? Outcome::kScaleExceeded
                  : Outcome::kCompileError;
  v.message = std::string(status.message());
  return v;
}

struct Decided {
  Verdict verdict;
  std::unique_ptr<GroundProblem> problem;
  Lit query;
};

Decided Decide(const KnowledgeBase& kb, const Formula& query,
               const EntailOptions& options) {
  Decided d;
  auto problem =
      GroundProblem::Create(kb, ProblemSignature(kb, query), options);
  if (!problem.ok()) {
    d.verdict = ScaleExceeded(problem.status());
    return d;
  }
  d.problem = std::move(*problem);
  auto q = d.problem->EncodeQuery(UniversalClosure(query));
  if (!q.ok()) {
    d.verdict = ScaleExceeded(q.status());
    d.problem.reset();
    return d;
  }
  d.query = *q;
  GroundProblem& p = *d.problem;
  Verdict& v = d.verdict;

  std::vector<size_t> core_neg, core_pos;
  bool cw_neg = false, cw_pos = false;
  std::optional<Interpretation> model_neg;
  if (p.CheckAll(~d.query) == sat::Result::kUnsat) {
    p.Core(core_neg, cw_neg);
  } else {
    model_neg = p.Minimize(p.Model(), p.query_root(0));
  }
  const bool neg_unsat = !model_neg.has_value();
  const bool pos_unsat = p.CheckAll(d.query) == sat::Result::kUnsat;
  if (pos_unsat) p.Core(core_pos, cw_pos);

  if (neg_unsat && pos_unsat) {
    v.outcome = Outcome::kInconsistent;
    v.premise_indices = core_neg;
    v.closed_world_used = cw_neg;
    v.message = "the premises are inconsistent";
  } else if (neg_unsat) {
    v.outcome = Outcome::kTrue;
    v.premise_indices = core_neg;
    v.closed_world_used = cw_neg;
  } else if (pos_unsat) {
    v.outcome = Outcome::kFalse;
    v.premise_indices = core_pos;
    v.closed_world_used = cw_pos;
  } else {
    v.outcome = Outcome::kUncertain;
    v.counterexample = std::move(model_neg);
  }
  return d;
}

std::string JoinAtoms(const std::vector<GroundAtom>& atoms) {
  std::string out;
  for (size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += ", ";
    out += atoms[i].ToString();
  }
  return out;
}

void CollectAtoms(const Formula& f, std::vector<GroundAtom>& out) {
  if (f.is_atom()) {
    GroundAtom a{f.atom().predicate, {}};
    for (const Term& t : f.atom().args) a.args.push_back(t.name);
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    return;
  }
  if (f.is_quantifier()) return;
  CollectAtoms(f.kind() == Formula::Kind::kNot ? f.child() : f.lhs(), out);
  if (f.is_binary()) CollectAtoms(f.rhs(), out);
}

// Finds the first binding of the query's outer universal variables under
// which the counterexample falsifies it.
std::string FailingInstance(const Formula& closed_query,
                            const Interpretation& model) {
  std::vector<std::string> vars;
  Formula body = closed_query;
  while (body.kind() == Formula::Kind::kForAll) {
    vars.push_back(body.var());
    body = body.body();
  }
  if (vars.empty()) return "";
  const auto& consts = model.universe().signature().constants();
  std::vector<size_t> choice(vars.size(), 0);
  constexpr size_t kMaxInstances = 100000;
  for (size_t tried = 0; tried < kMaxInstances; ++tried) {
    Formula inst = body;
    for (size_t i = vars.size(); i-- > 0;) {
      inst = Substitute(inst, vars[i], consts[choice[i]]);
    }
    if (!Eval(inst, model)) {
      std::string out = "The query fails for ";
      for (size_t i = 0; i < vars.size(); ++i) {
        if (i) out += ", ";
        out += vars[i] + " = " + consts[choice[i]];
      }
      std::vector<GroundAtom> atoms;
      CollectAtoms(inst, atoms);
      if (!atoms.empty()) {
        out += ":";
        for (size_t i = 0; i < atoms.size(); ++i) {
          out += i ? "; " : " ";
          out += atoms[i].ToString() +
                 (model.Value(atoms[i]) ? " is true" : " is false");
        }
      }
      return out + ".\n";
    }
    size_t k = 0;
    while (k < choice.size() && ++choice[k] == consts.size()) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return "";
}

}  // namespace

KnowledgeBase KnowledgeBase::FromPremises(std::vector<Formula> premises) {
  KnowledgeBase kb;
  kb.signature = Signature::Of(premises);
  kb.warnings = ArityConflictWarnings(premises);
  kb.premises = std::move(premises);
  return kb;
}

std::string PredicateAlignmentKey(std::string_view name) {
  std::string key;
  for (char c : name) {
    if (c == '_') continue;
    key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  for (std::string_view suffix : {"sses", "xes", "zes", "ches", "shes"}) {
    if (EndsWith(key, suffix)) {
      key.resize(key.size() - 2);
      return key;
    }
  }
  if (key.size() > 1 && EndsWith(key, "s") && !EndsWith(key, "ss")) {
    key.pop_back();
  }
  return key;
}

AlignedProblem AlignPredicates(std::span<const Formula> premises,
                               const Formula& query) {
  std::vector<Formula> all(premises.begin(), premises.end());
  all.push_back(query);

  std::map<std::pair<std::string, size_t>, std::map<std::string, size_t>>
      groups;
  std::function<void(const Formula&)> count = [&](const Formula& f) {
    if (f.is_atom()) {
      ++groups[{PredicateAlignmentKey(f.atom().predicate), f.atom().arity()}]
              [f.atom().predicate];
    } else if (f.kind() == Formula::Kind::kNot || f.is_quantifier()) {
      count(f.child());
    } else {
      count(f.lhs());
      count(f.rhs());
    }
  };
  for (const Formula& f : all) count(f);

  AlignedProblem out{KnowledgeBase{}, query};
  std::map<std::pair<std::string, size_t>, std::string> renames;
  for (const auto& [key, spellings] : groups) {
    if (spellings.size() < 2) continue;
    std::string best;
    size_t best_count = 0;
    for (const auto& [name, n] : spellings) {
      bool better = n > best_count;
      if (n == best_count) {
        std::string a = Lower(name), b = Lower(best);
        better = a < b || (a == b && name < best);
      }
      if (better) {
        best = name;
        best_count = n;
      }
    }
    for (const auto& [name, n] : spellings) {
      if (name == best) continue;
      renames[{name, key.second}] = best;
      out.kb.alignment_log.push_back({name, best, key.second});
    }
  }
  std::sort(out.kb.alignment_log.begin(), out.kb.alignment_log.end(),
            [](const AlignmentRewrite& a, const AlignmentRewrite& b) {
              return std::tie(a.canonical, a.arity, a.original) <
                     std::tie(b.canonical, b.arity, b.original);
            });

  std::vector<Formula> rewritten;
  for (const Formula& f : premises) {
    rewritten.push_back(RenamePredicates(f, renames));
  }
  out.query = RenamePredicates(query, renames);
  std::vector<Formula> aligned_all = rewritten;
  aligned_all.push_back(out.query);
  out.kb.signature = Signature::Of(rewritten);
  out.kb.warnings = ArityConflictWarnings(aligned_all);
  out.kb.premises = std::move(rewritten);
  return out;
}

std::string_view OutcomeName(Outcome outcome) {
  switch (outcome) {
    case Outcome::kTrue:
      return "true";
    case Outcome::kFalse:
      return "false";
    case Outcome::kUncertain:
      return "uncertain";
    case Outcome::kCompileError:
      return "compile-error";
    case Outcome::kInconsistent:
      return "inconsistent";
    case Outcome::kScaleExceeded:
      return "scale-exceeded";
  }
  return "unknown";
}

Signature ProblemSignature(const KnowledgeBase& kb, const Formula& query) {
  Signature sig = kb.signature;
  for (const Formula& p : kb.premises) sig.AddFormula(p);
  sig.AddFormula(query);
  sig.EnsureNonEmptyDomain();
  return sig;
}

std::set<std::string> ClosedWorldPredicates(const KnowledgeBase& kb,
                                            const EntailOptions& options) {
  if (!options.closed_world_predicates.empty()) {
    return options.closed_world_predicates;
  }
  std::set<std::string> out;
  for (const Formula& p : kb.premises) {
    if (!p.is_atom()) continue;
    bool ground = std::none_of(p.atom().args.begin(), p.atom().args.end(),
                               [](const Term& t) { return t.is_variable(); });
    if (ground) out.insert(p.atom().predicate);
  }
  return out;
}

Verdict Entail(const KnowledgeBase& kb, const Formula& query,
               const EntailOptions& options) {
  return Decide(kb, query, options).verdict;
}

EntailmentRun EntailText(std::span<const std::string> premises,
                         std::string_view query, const EntailOptions& options) {
  EntailmentRun run;
  std::vector<Formula> parsed;
  std::vector<Diagnostic> errors;
  for (size_t i = 0; i < premises.size(); ++i) {
    ParseOutcome o = Parse(premises[i]);
    if (o.ok()) {
      parsed.push_back(o.formula());
      continue;
    }
    for (Diagnostic d : o.errors()) {
      d.message = "premise " + std::to_string(i + 1) + ": " + d.message;
      errors.push_back(std::move(d));
    }
  }
  ParseOutcome q = Parse(query);
  if (!q.ok()) {
    for (Diagnostic d : q.errors()) {
      d.message = "query: " + d.message;
      errors.push_back(std::move(d));
    }
  }
  if (!errors.empty()) {
    run.verdict.outcome = Outcome::kCompileError;
    run.verdict.diagnostics = std::move(errors);
    return run;
  }
  run.problem = AlignPredicates(parsed, q.formula());
  run.verdict = Entail(run.problem->kb, run.problem->query, options);
  return run;
}

absl::StatusOr<EntityResult> EnumerateEntities(const KnowledgeBase& kb,
                                               const Atom& templ,
                                               const EntailOptions& options) {
  std::set<std::string> vars;
  for (const Term& t : templ.args) {
    if (t.is_variable()) vars.insert(t.name);
  }
  if (vars.size() != 1) {
    return absl::InvalidArgumentError(
        "the template must contain exactly one distinct variable");
  }
  const std::string var = *vars.begin();
  const Formula pattern = Formula::MakeAtom(templ);

  EntityResult result;
  // Candidates range over the constants of the knowledge base only.
  Signature sig = ProblemSignature(kb, pattern);
  auto problem = GroundProblem::Create(kb, sig, options);
  if (!problem.ok()) return problem.status();
  GroundProblem& p = **problem;
  for (const std::string& c : kb.signature.constants()) {
    Formula q = Substitute(pattern, var, c);
    auto lit = p.EncodeQuery(q);
    if (!lit.ok()) {
      result.warnings.push_back(c + ": " + std::string(lit.status().message()));
      continue;
    }
    if (p.CheckAll(~*lit) == sat::Result::kUnsat) {
      if (p.CheckAll(*lit) == sat::Result::kUnsat) {
        result.warnings.push_back(c + ": the premises are inconsistent");
        continue;
      }
      result.entities.push_back(c);
    }
  }
  return result;
}

std::optional<SupportSet> MinimalSupport(const Verdict& verdict,
                                         const KnowledgeBase& kb,
                                         const Formula& query,
                                         const EntailOptions& options) {
  if (verdict.outcome != Outcome::kTrue && verdict.outcome != Outcome::kFalse) {
    return std::nullopt;
  }
  Decided d = Decide(kb, query, options);
  if (!d.problem || d.verdict.outcome != verdict.outcome) return std::nullopt;
  GroundProblem& p = *d.problem;
  const Lit q = verdict.outcome == Outcome::kTrue ? ~d.query : d.query;

  SupportSet s{d.verdict.premise_indices, d.verdict.closed_world_used};
  for (size_t k = 0; k < s.premises.size();) {
    std::vector<size_t> without = s.premises;
    without.erase(without.begin() + static_cast<ptrdiff_t>(k));
    if (p.Check(without, s.closed_world, q) == sat::Result::kUnsat) {
      s.premises = std::move(without);
    } else {
      ++k;
    }
  }
  if (s.closed_world &&
      p.Check(s.premises, false, q) == sat::Result::kUnsat) {
    s.closed_world = false;
  }
  return s;
}

std::string Explain(const Verdict& verdict, const KnowledgeBase& kb,
                    const Formula& query, const EntailOptions& options) {
  std::string out = "Verdict: ";
  out += OutcomeName(verdict.outcome);
  out += "\n";
  const std::string q = Print(UniversalClosure(query));
  switch (verdict.outcome) {
    case Outcome::kCompileError:
      out += "The input could not be compiled:\n";
      for (const Diagnostic& d : verdict.diagnostics) {
        out += "  " + d.code + " [" + std::to_string(d.span.begin) + ", " +
               std::to_string(d.span.end) + "): " + d.message + "\n";
      }
      if (verdict.diagnostics.empty()) out += "  " + verdict.message + "\n";
      return out;
    case Outcome::kInconsistent:
    case Outcome::kScaleExceeded:
      return out + verdict.message + "\n";
    case Outcome::kUncertain: {
      out += "Final Answer: False\n";
      out += "The query " + q + " is not entailed by the premises.\n";
      if (!verdict.counterexample) return out;
      const Interpretation& m = *verdict.counterexample;
      std::vector<GroundAtom> true_atoms = m.TrueAtoms();
      out += "Counterexample (true atoms; all others false): ";
      out += true_atoms.empty() ? "none" : JoinAtoms(true_atoms);
      out += "\n";
      out += FailingInstance(UniversalClosure(query), m);
      return out;
    }
    case Outcome::kTrue:
    case Outcome::kFalse:
      break;
  }
  const bool entailed = verdict.outcome == Outcome::kTrue;
  out += entailed ? "Final Answer: True\n" : "Final Answer: False\n";
  auto support = MinimalSupport(verdict, kb, query, options);
  SupportSet s = support.value_or(
      SupportSet{verdict.premise_indices, verdict.closed_world_used});
  out += "The query " + q;
  out += entailed ? " is entailed" : " is contradicted";
  if (s.premises.empty() && !s.closed_world) {
    return out + " using no premises.\n";
  }
  out += " using:\n";
  for (size_t i : s.premises) {
    out += "  [" + std::to_string(i + 1) + "] " + Print(kb.premises[i]) + "\n";
  }
  if (s.closed_world) {
    out += "  closed-world assumption over ";
    bool first = true;
    for (const std::string& pred : ClosedWorldPredicates(kb, options)) {
      out += first ? "" : ", ";
      out += pred;
      first = false;
    }
    std::vector<GroundAtom> unlisted;
    std::vector<GroundAtom> query_atoms;
    CollectAtoms(query, query_atoms);
    for (const GroundAtom& a : query_atoms) {
      bool is_fact = false;
      for (const Formula& p : kb.premises) {
        if (!p.is_atom() || p.atom().predicate != a.predicate) continue;
        GroundAtom f{p.atom().predicate, {}};
        for (const Term& t : p.atom().args) f.args.push_back(t.name);
        if (f == a) is_fact = true;
      }
      if (!is_fact && ClosedWorldPredicates(kb, options).count(a.predicate)) {
        unlisted.push_back(a);
      }
    }
    if (!unlisted.empty()) out += " (not asserted: " + JoinAtoms(unlisted) + ")";
    out += "\n";
  }
  return out;
}

}  // namespace foleval

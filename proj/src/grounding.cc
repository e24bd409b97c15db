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

#include "foleval/grounding.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <utility>

#include "absl/status/status.h"
#include "foleval/circuit.h"

namespace foleval {
namespace {

size_t SatAdd(size_t a, size_t b) {
  return a > std::numeric_limits<size_t>::max() - b
             ? std::numeric_limits<size_t>::max()
             : a + b;
}

size_t SatMul(size_t a, size_t b) {
  if (a != 0 && b > std::numeric_limits<size_t>::max() / a) {
    return std::numeric_limits<size_t>::max();
  }
  return a * b;
}

std::string JoinNames(const std::set<std::string>& names) {
  std::string out;
  for (const std::string& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

Formula Expand(const Formula& f, const std::vector<std::string>& domain) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      return f;
    case Formula::Kind::kNot:
      return Formula::Not(Expand(f.child(), domain));
    case Formula::Kind::kForAll:
    case Formula::Kind::kExists: {
      const Formula::Kind join = f.kind() == Formula::Kind::kForAll
                                     ? Formula::Kind::kAnd
                                     : Formula::Kind::kOr;
      std::vector<Formula> parts;
      parts.reserve(domain.size());
      for (const std::string& c : domain) {
        parts.push_back(Expand(Substitute(f.body(), f.var(), c), domain));
      }
      Formula out = parts.back();
      for (size_t i = parts.size() - 1; i-- > 0;) {
        out = Formula::Binary(join, parts[i], std::move(out));
      }
      return out;
    }
    default:
      return Formula::Binary(f.kind(), Expand(f.lhs(), domain),
                             Expand(f.rhs(), domain));
  }
}

bool EvalImpl(const Formula& f, const Interpretation& interp) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      GroundAtom atom{f.atom().predicate, {}};
      for (const Term& t : f.atom().args) atom.args.push_back(t.name);
      return interp.Value(atom);
    }
    case Formula::Kind::kNot:
      return !EvalImpl(f.child(), interp);
    case Formula::Kind::kAnd:
      return EvalImpl(f.lhs(), interp) && EvalImpl(f.rhs(), interp);
    case Formula::Kind::kOr:
      return EvalImpl(f.lhs(), interp) || EvalImpl(f.rhs(), interp);
    case Formula::Kind::kImplies:
      return !EvalImpl(f.lhs(), interp) || EvalImpl(f.rhs(), interp);
    case Formula::Kind::kIff:
      return EvalImpl(f.lhs(), interp) == EvalImpl(f.rhs(), interp);
    case Formula::Kind::kForAll:
      for (const std::string& c : interp.universe().signature().constants()) {
        if (!EvalImpl(Substitute(f.body(), f.var(), c), interp)) return false;
      }
      return true;
    case Formula::Kind::kExists:
      for (const std::string& c : interp.universe().signature().constants()) {
        if (EvalImpl(Substitute(f.body(), f.var(), c), interp)) return true;
      }
      return false;
  }
  return false;
}

// Bit patterns for the six least significant row bits: bit j of
// kRowBit[k] is bit k of j.
constexpr uint64_t kRowBit[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

}  // namespace

Signature Signature::Of(std::span<const Formula> formulas) {
  Signature sig;
  for (const Formula& f : formulas) sig.AddFormula(f);
  return sig;
}

void Signature::AddFormula(const Formula& f) {
  for (auto& [name, arity] : Predicates(f)) AddPredicate({name, arity});
  for (const std::string& c : Constants(f)) AddConstant(c);
}

void Signature::AddPredicate(PredicateSymbol p) {
  auto it = std::lower_bound(predicates_.begin(), predicates_.end(), p);
  if (it == predicates_.end() || *it != p) predicates_.insert(it, std::move(p));
}

void Signature::AddConstant(std::string_view name) {
  if (HasConstant(name)) return;
  constant_index_.emplace(std::string(name), constants_.size());
  constants_.emplace_back(name);
}

bool Signature::HasConstant(std::string_view name) const {
  return constant_index_.find(name) != constant_index_.end();
}

std::optional<size_t> Signature::ConstantIndex(std::string_view name) const {
  auto it = constant_index_.find(name);
  if (it == constant_index_.end()) return std::nullopt;
  return it->second;
}

std::string Signature::EnsureNonEmptyDomain() {
  if (!constants_.empty()) return "";
  AddConstant("c0");
  return "c0";
}

std::string GroundAtom::ToString() const {
  std::string out = predicate;
  if (args.empty()) return out;
  out += '(';
  for (size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ", ";
    out += args[i];
  }
  out += ')';
  return out;
}

absl::StatusOr<std::shared_ptr<const AtomUniverse>> AtomUniverse::Create(
    Signature sig, size_t max_atoms) {
  std::shared_ptr<AtomUniverse> u(new AtomUniverse(std::move(sig)));
  const size_t n = u->sig_.constants().size();
  size_t total = 0;
  for (const PredicateSymbol& p : u->sig_.predicates()) {
    size_t count = 1;
    for (size_t i = 0; i < p.arity; ++i) count = SatMul(count, n);
    u->offsets_.push_back(total);
    total = SatAdd(total, count);
  }
  if (total > max_atoms) {
    return absl::ResourceExhaustedError(
        "domain-too-large: " + std::to_string(total) +
        " ground atoms exceed the limit of " + std::to_string(max_atoms));
  }
  u->size_ = total;
  return std::shared_ptr<const AtomUniverse>(std::move(u));
}

GroundAtom AtomUniverse::atom(size_t index) const {
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  const size_t p = static_cast<size_t>(it - offsets_.begin()) - 1;
  const PredicateSymbol& sym = sig_.predicates()[p];
  GroundAtom out{sym.name, std::vector<std::string>(sym.arity)};
  size_t rest = index - offsets_[p];
  const size_t n = sig_.constants().size();
  for (size_t i = sym.arity; i-- > 0;) {
    out.args[i] = sig_.constants()[rest % n];
    rest /= n;
  }
  return out;
}

std::optional<size_t> AtomUniverse::IndexOf(
    const PredicateSymbol& p, std::span<const size_t> const_indices) const {
  const auto& preds = sig_.predicates();
  const auto it = std::lower_bound(preds.begin(), preds.end(), p);
  if (it == preds.end() || *it != p || const_indices.size() != p.arity) {
    return std::nullopt;
  }
  const size_t n = sig_.constants().size();
  size_t index = 0;
  for (size_t c : const_indices) {
    if (c >= n) return std::nullopt;
    index = index * n + c;
  }
  return offsets_[static_cast<size_t>(it - preds.begin())] + index;
}

std::optional<size_t> AtomUniverse::IndexOf(const GroundAtom& atom) const {
  std::vector<size_t> idx;
  idx.reserve(atom.args.size());
  for (const std::string& a : atom.args) {
    std::optional<size_t> c = sig_.ConstantIndex(a);
    if (!c) return std::nullopt;
    idx.push_back(*c);
  }
  return IndexOf(PredicateSymbol{atom.predicate, atom.args.size()}, idx);
}

Interpretation::Interpretation(std::shared_ptr<const AtomUniverse> universe)
    : universe_(std::move(universe)), truth_(universe_->size(), false) {}

Interpretation::Interpretation(std::shared_ptr<const AtomUniverse> universe,
                               std::vector<bool> truth)
    : universe_(std::move(universe)), truth_(std::move(truth)) {
  truth_.resize(universe_->size(), false);
}

bool Interpretation::Value(const GroundAtom& atom) const {
  std::optional<size_t> i = universe_->IndexOf(atom);
  return i.has_value() && truth_[*i];
}

void Interpretation::Set(const GroundAtom& atom, bool value) {
  if (std::optional<size_t> i = universe_->IndexOf(atom)) truth_[*i] = value;
}

std::vector<GroundAtom> Interpretation::TrueAtoms() const {
  std::vector<GroundAtom> out;
  for (size_t i = 0; i < truth_.size(); ++i) {
    if (truth_[i]) out.push_back(universe_->atom(i));
  }
  return out;
}

size_t GroundSizeEstimate(const Formula& f, size_t domain_size) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      return 1;
    case Formula::Kind::kNot:
      return SatAdd(1, GroundSizeEstimate(f.child(), domain_size));
    case Formula::Kind::kForAll:
    case Formula::Kind::kExists: {
      const size_t body = GroundSizeEstimate(f.body(), domain_size);
      return SatAdd(SatMul(body, domain_size),
                    domain_size > 0 ? domain_size - 1 : 0);
    }
    default:
      return SatAdd(1, SatAdd(GroundSizeEstimate(f.lhs(), domain_size),
                              GroundSizeEstimate(f.rhs(), domain_size)));
  }
}

absl::StatusOr<Formula> Ground(const Formula& f, const Signature& sig,
                               size_t node_budget) {
  if (std::set<std::string> free = FreeVars(f); !free.empty()) {
    return absl::InvalidArgumentError("formula has free variables: " +
                                      JoinNames(free));
  }
  for (const std::string& c : Constants(f)) {
    if (!sig.HasConstant(c)) {
      return absl::InvalidArgumentError("constant '" + c +
                                        "' is not in the signature");
    }
  }
  const size_t estimate = GroundSizeEstimate(f, sig.constants().size());
  if (sig.constants().empty() && estimate != f.size()) {
    return absl::InvalidArgumentError("cannot ground quantifiers over an "
                                      "empty domain");
  }
  if (estimate > node_budget) {
    return absl::ResourceExhaustedError(
        "domain-too-large: grounding needs " + std::to_string(estimate) +
        " nodes, budget is " + std::to_string(node_budget));
  }
  return Expand(f, sig.constants());
}

bool Eval(const Formula& f, const Interpretation& interpretation) {
  return EvalImpl(f, interpretation);
}

absl::StatusOr<std::vector<Interpretation>> EnumerateModels(
    std::span<const Formula> formulas, const Signature& sig, size_t cap) {
  absl::StatusOr<std::shared_ptr<const AtomUniverse>> universe =
      AtomUniverse::Create(sig, kMaxEnumerationAtoms);
  if (!universe.ok()) {
    return absl::ResourceExhaustedError(
        "scale-exceeded: model enumeration is limited to " +
        std::to_string(kMaxEnumerationAtoms) + " ground atoms");
  }
  GroundCircuit circuit(*universe, std::numeric_limits<size_t>::max());
  std::vector<GroundCircuit::NodeId> roots;
  for (const Formula& f : formulas) {
    absl::StatusOr<GroundCircuit::NodeId> root = circuit.Add(f);
    if (!root.ok()) return root.status();
    roots.push_back(*root);
  }

  const size_t n = (*universe)->size();
  const uint64_t rows = uint64_t{1} << n;
  std::vector<Interpretation> models;
  std::vector<uint64_t> universe_words(n);
  std::vector<uint64_t> atom_words(circuit.num_atoms());
  for (uint64_t base = 0; base < rows && models.size() < cap; base += 64) {
    for (size_t i = 0; i < n; ++i) {
      const size_t bit = n - 1 - i;
      universe_words[i] = bit < 6 ? kRowBit[bit]
                                  : (((base >> bit) & 1) != 0 ? ~uint64_t{0} : 0);
    }
    for (size_t a = 0; a < atom_words.size(); ++a) {
      atom_words[a] = universe_words[circuit.universe_index(a)];
    }
    uint64_t sat = rows - base >= 64 ? ~uint64_t{0}
                                     : (uint64_t{1} << (rows - base)) - 1;
    if (!roots.empty()) {
      const std::vector<uint64_t> values = circuit.EvalWords(atom_words);
      for (GroundCircuit::NodeId r : roots) sat &= values[r];
    }
    while (sat != 0 && models.size() < cap) {
      const int j = std::countr_zero(sat);
      sat &= sat - 1;
      const uint64_t row = base + static_cast<uint64_t>(j);
      std::vector<bool> truth(n);
      for (size_t i = 0; i < n; ++i) truth[i] = ((row >> (n - 1 - i)) & 1) != 0;
      models.emplace_back(*universe, std::move(truth));
    }
  }
  return models;
}

}  // namespace foleval

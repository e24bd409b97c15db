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

// Finite-domain semantics: signatures, ground atoms, interpretations and
// grounding of quantified formulas over a set of constants.

#ifndef FOLEVAL_GROUNDING_H_
#define FOLEVAL_GROUNDING_H_

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "foleval/formula.h"

namespace foleval {

inline constexpr size_t kDefaultNodeBudget = 1'000'000;

struct PredicateSymbol {
  std::string name;
  size_t arity = 0;

  auto operator<=>(const PredicateSymbol&) const = default;
};

// Predicates are kept sorted by (name, arity). A name may appear with two
// arities; the two symbols are then distinct. Constants keep insertion order.
class Signature {
 public:
  Signature() = default;

  static Signature Of(std::span<const Formula> formulas);

  void AddFormula(const Formula& f);
  void AddPredicate(PredicateSymbol p);
  void AddConstant(std::string_view name);
  bool HasConstant(std::string_view name) const;
  std::optional<size_t> ConstantIndex(std::string_view name) const;

  // Injects a constant named c0 (or c1, ...) not already present when the
  // domain is empty. Returns the injected name, or "" if none was needed.
  std::string EnsureNonEmptyDomain();

  const std::vector<PredicateSymbol>& predicates() const { return predicates_; }
  const std::vector<std::string>& constants() const { return constants_; }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<PredicateSymbol> predicates_;
  std::vector<std::string> constants_;
  std::map<std::string, size_t, std::less<>> constant_index_;
};

struct GroundAtom {
  std::string predicate;
  std::vector<std::string> args;

  auto operator<=>(const GroundAtom&) const = default;
  std::string ToString() const;
};

// Every ground atom constructible from a signature, in a fixed order:
// predicates in signature order, then argument tuples lexicographically by
// constant position.
class AtomUniverse {
 public:
  // Fails when the universe would hold more than `max_atoms` atoms.
  static absl::StatusOr<std::shared_ptr<const AtomUniverse>> Create(
      Signature sig, size_t max_atoms = kDefaultNodeBudget);

  const Signature& signature() const { return sig_; }
  size_t size() const { return size_; }

  GroundAtom atom(size_t index) const;
  std::optional<size_t> IndexOf(const GroundAtom& atom) const;
  std::optional<size_t> IndexOf(const PredicateSymbol& p,
                                std::span<const size_t> const_indices) const;

 private:
  explicit AtomUniverse(Signature sig) : sig_(std::move(sig)) {}

  Signature sig_;
  // offsets_[i] is the index of the first atom of predicates()[i].
  std::vector<size_t> offsets_;
  size_t size_ = 0;
};

class Interpretation {
 public:
  // All atoms false.
  explicit Interpretation(std::shared_ptr<const AtomUniverse> universe);
  Interpretation(std::shared_ptr<const AtomUniverse> universe,
                 std::vector<bool> truth);

  const AtomUniverse& universe() const { return *universe_; }
  const std::shared_ptr<const AtomUniverse>& universe_ptr() const {
    return universe_;
  }

  bool value(size_t index) const { return truth_[index]; }
  // Atoms outside the universe read as false.
  bool Value(const GroundAtom& atom) const;
  void Set(size_t index, bool value) { truth_[index] = value; }
  void Set(const GroundAtom& atom, bool value);

  std::vector<GroundAtom> TrueAtoms() const;
  const std::vector<bool>& truth() const { return truth_; }

  friend bool operator==(const Interpretation& a, const Interpretation& b) {
    return a.truth_ == b.truth_ &&
           a.universe_->signature() == b.universe_->signature();
  }

 private:
  std::shared_ptr<const AtomUniverse> universe_;
  std::vector<bool> truth_;
};

// Number of nodes grounding `f` over `domain_size` constants produces,
// saturating at SIZE_MAX.
size_t GroundSizeEstimate(const Formula& f, size_t domain_size);

// Expands quantifiers over sig.constants(): ∀ into a right-nested
// conjunction, ∃ into a disjunction. Fails if `f` has free variables, uses a
// constant outside `sig`, or the result would exceed `node_budget` nodes.
absl::StatusOr<Formula> Ground(const Formula& f, const Signature& sig,
                               size_t node_budget = kDefaultNodeBudget);

// Standard Boolean semantics. Quantifiers, if any remain, range over the
// universe's constants.
bool Eval(const Formula& f, const Interpretation& interpretation);

// Interpretations over the universe of `sig` that satisfy every formula,
// in lexicographic order of assignments (first atom most significant,
// false before true), at most `cap` of them. Fails with ResourceExhausted
// when the universe has more than kMaxEnumerationAtoms atoms.
inline constexpr size_t kMaxEnumerationAtoms = 25;
absl::StatusOr<std::vector<Interpretation>> EnumerateModels(
    std::span<const Formula> formulas, const Signature& sig, size_t cap);

}  // namespace foleval

#endif  // FOLEVAL_GROUNDING_H_

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

#include "foleval/circuit.h"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "absl/status/status.h"

namespace foleval {
namespace {

GroundCircuit::Op OpFor(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::kAnd:
      return GroundCircuit::Op::kAnd;
    case Formula::Kind::kOr:
      return GroundCircuit::Op::kOr;
    case Formula::Kind::kImplies:
      return GroundCircuit::Op::kImplies;
    default:
      return GroundCircuit::Op::kIff;
  }
}

}  // namespace

GroundCircuit::GroundCircuit(std::shared_ptr<const AtomUniverse> universe,
                             size_t node_budget)
    : universe_(std::move(universe)), node_budget_(node_budget) {}

GroundCircuit::NodeId GroundCircuit::Intern(Node n) {
  auto [it, inserted] =
      interned_.try_emplace(n, static_cast<NodeId>(nodes_.size()));
  if (inserted) nodes_.push_back(n);
  return it->second;
}

GroundCircuit::NodeId GroundCircuit::AtomNode(size_t universe_index) {
  auto [it, inserted] = universe_to_local_.try_emplace(
      universe_index, static_cast<uint32_t>(local_to_universe_.size()));
  if (inserted) local_to_universe_.push_back(universe_index);
  return Intern({Op::kAtom, it->second, 0});
}

absl::StatusOr<GroundCircuit::NodeId> GroundCircuit::Add(
    const Formula& closed) {
  const size_t estimate =
      GroundSizeEstimate(closed, universe_->signature().constants().size());
  estimated_ = estimate > std::numeric_limits<size_t>::max() - estimated_
                   ? std::numeric_limits<size_t>::max()
                   : estimated_ + estimate;
  if (estimated_ > node_budget_) {
    return absl::ResourceExhaustedError(
        "domain-too-large: grounding needs more than " +
        std::to_string(node_budget_) + " nodes");
  }
  std::vector<std::pair<std::string, size_t>> env;
  return Build(closed, env);
}

absl::StatusOr<GroundCircuit::NodeId> GroundCircuit::Build(
    const Formula& f, std::vector<std::pair<std::string, size_t>>& env) {
  const Signature& sig = universe_->signature();
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      std::vector<size_t> idx;
      idx.reserve(f.atom().arity());
      for (const Term& t : f.atom().args) {
        if (t.is_variable()) {
          auto it = std::find_if(env.rbegin(), env.rend(),
                                 [&t](const auto& b) { return b.first == t.name; });
          if (it == env.rend()) {
            return absl::InvalidArgumentError("free variable '" + t.name +
                                              "' cannot be grounded");
          }
          idx.push_back(it->second);
        } else {
          std::optional<size_t> c = sig.ConstantIndex(t.name);
          if (!c) {
            return absl::InvalidArgumentError("constant '" + t.name +
                                              "' is not in the signature");
          }
          idx.push_back(*c);
        }
      }
      std::optional<size_t> u =
          universe_->IndexOf({f.atom().predicate, f.atom().arity()}, idx);
      if (!u) {
        return absl::InvalidArgumentError(
            "predicate '" + f.atom().predicate + "/" +
            std::to_string(f.atom().arity()) + "' is not in the signature");
      }
      return AtomNode(*u);
    }
    case Formula::Kind::kNot: {
      absl::StatusOr<NodeId> c = Build(f.child(), env);
      if (!c.ok()) return c;
      return MakeNot(*c);
    }
    case Formula::Kind::kForAll:
    case Formula::Kind::kExists: {
      const size_t n = sig.constants().size();
      if (n == 0) {
        return absl::InvalidArgumentError(
            "cannot ground quantifiers over an empty domain");
      }
      const Op join = f.kind() == Formula::Kind::kForAll ? Op::kAnd : Op::kOr;
      std::vector<NodeId> parts;
      parts.reserve(n);
      for (size_t c = 0; c < n; ++c) {
        env.emplace_back(f.var(), c);
        absl::StatusOr<NodeId> part = Build(f.body(), env);
        env.pop_back();
        if (!part.ok()) return part;
        parts.push_back(*part);
      }
      NodeId out = parts.back();
      for (size_t i = parts.size() - 1; i-- > 0;) {
        out = MakeBinary(join, parts[i], out);
      }
      return out;
    }
    default: {
      absl::StatusOr<NodeId> l = Build(f.lhs(), env);
      if (!l.ok()) return l;
      absl::StatusOr<NodeId> r = Build(f.rhs(), env);
      if (!r.ok()) return r;
      return MakeBinary(OpFor(f.kind()), *l, *r);
    }
  }
}

std::vector<uint32_t> GroundCircuit::AtomsReachableFrom(
    std::span<const NodeId> roots) const {
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<NodeId> stack(roots.begin(), roots.end());
  std::vector<uint32_t> atoms;
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    if (seen[id]) continue;
    seen[id] = true;
    const Node& n = nodes_[id];
    switch (n.op) {
      case Op::kAtom:
        atoms.push_back(n.a);
        break;
      case Op::kNot:
        stack.push_back(n.a);
        break;
      default:
        stack.push_back(n.a);
        stack.push_back(n.b);
        break;
    }
  }
  std::sort(atoms.begin(), atoms.end(), [this](uint32_t x, uint32_t y) {
    return local_to_universe_[x] < local_to_universe_[y];
  });
  return atoms;
}

std::vector<uint64_t> GroundCircuit::EvalWords(
    std::span<const uint64_t> atom_words) const {
  std::vector<uint64_t> v(nodes_.size());
  for (size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    switch (n.op) {
      case Op::kAtom:
        v[i] = atom_words[n.a];
        break;
      case Op::kNot:
        v[i] = ~v[n.a];
        break;
      case Op::kAnd:
        v[i] = v[n.a] & v[n.b];
        break;
      case Op::kOr:
        v[i] = v[n.a] | v[n.b];
        break;
      case Op::kImplies:
        v[i] = ~v[n.a] | v[n.b];
        break;
      case Op::kIff:
        v[i] = ~(v[n.a] ^ v[n.b]);
        break;
    }
  }
  return v;
}

bool GroundCircuit::Eval(NodeId root,
                         const Interpretation& interpretation) const {
  std::vector<uint64_t> words(num_atoms());
  for (size_t a = 0; a < words.size(); ++a) {
    words[a] = interpretation.value(universe_index(a)) ? ~uint64_t{0} : 0;
  }
  return (EvalWords(words)[root] & 1) != 0;
}

}  // namespace foleval

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

// Indexed ground circuits: the propositional form of grounded formulas,
// shared by truth-table comparison, model enumeration and the SAT encoding.

#ifndef FOLEVAL_CIRCUIT_H_
#define FOLEVAL_CIRCUIT_H_

#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "absl/status/statusor.h"
#include "foleval/formula.h"
#include "foleval/grounding.h"

namespace foleval {

class GroundCircuit {
 public:
  enum class Op : uint8_t { kAtom, kNot, kAnd, kOr, kImplies, kIff };

  using NodeId = uint32_t;

  struct Node {
    Op op;
    // kAtom: local atom id. Otherwise child node ids (b unused for kNot).
    uint32_t a = 0;
    uint32_t b = 0;
  };

  GroundCircuit(std::shared_ptr<const AtomUniverse> universe,
                size_t node_budget = kDefaultNodeBudget);

  // Grounds a closed formula over the universe's constants. The estimated
  // expansion size of everything grounded so far must stay within the node
  // budget, otherwise ResourceExhausted.
  absl::StatusOr<NodeId> Add(const Formula& closed);

  NodeId AtomNode(size_t universe_index);
  NodeId MakeNot(NodeId a) { return Intern({Op::kNot, a, 0}); }
  NodeId MakeBinary(Op op, NodeId a, NodeId b) { return Intern({op, a, b}); }

  const std::vector<Node>& nodes() const { return nodes_; }
  const AtomUniverse& universe() const { return *universe_; }

  // Atoms are numbered densely in first-use order.
  size_t num_atoms() const { return local_to_universe_.size(); }
  size_t universe_index(size_t local_atom) const {
    return local_to_universe_[local_atom];
  }

  // Local atom ids reachable from `roots`, sorted by universe index.
  std::vector<uint32_t> AtomsReachableFrom(std::span<const NodeId> roots) const;

  // Evaluates every node on 64 assignments at once. Bit j of
  // atom_words[local] is the value of that atom in assignment j.
  std::vector<uint64_t> EvalWords(std::span<const uint64_t> atom_words) const;

  bool Eval(NodeId root, const Interpretation& interpretation) const;

 private:
  struct NodeHash {
    size_t operator()(const Node& n) const {
      return (static_cast<size_t>(n.op) * 0x9E3779B97F4A7C15ULL) ^
             (static_cast<size_t>(n.a) << 32) ^ n.b;
    }
  };
  struct NodeEq {
    bool operator()(const Node& x, const Node& y) const {
      return x.op == y.op && x.a == y.a && x.b == y.b;
    }
  };

  NodeId Intern(Node n);
  absl::StatusOr<NodeId> Build(const Formula& f,
                               std::vector<std::pair<std::string, size_t>>& env);

  std::shared_ptr<const AtomUniverse> universe_;
  size_t node_budget_;
  size_t estimated_ = 0;
  std::vector<Node> nodes_;
  std::unordered_map<Node, NodeId, NodeHash, NodeEq> interned_;
  std::vector<size_t> local_to_universe_;
  std::unordered_map<size_t, uint32_t> universe_to_local_;
};

}  // namespace foleval

#endif  // FOLEVAL_CIRCUIT_H_

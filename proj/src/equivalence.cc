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

#include "foleval/equivalence.h"

#include <algorithm>
#include <bit>
#include <random>
#include <vector>

#include "foleval/circuit.h"
#include "foleval/syntax.h"

namespace foleval {
namespace {

constexpr uint64_t kRowBit[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

}  // namespace

LeResult CompareTruthTables(const Formula& gold, const Formula& pred,
                            const LeOptions& options) {
  LeResult result;
  const Formula g = UniversalClosure(gold);
  const Formula p = UniversalClosure(pred);

  Signature sig;
  for (const Formula* f : {&g, &p}) {
    for (auto& [name, arity] : Predicates(*f)) sig.AddPredicate({name, arity});
  }
  std::vector<std::string> constants = Constants(g);
  for (std::string& c : Constants(p)) constants.push_back(std::move(c));
  std::sort(constants.begin(), constants.end());
  constants.erase(std::unique(constants.begin(), constants.end()),
                  constants.end());
  if (constants.empty()) constants = {"c0", "c1"};
  for (const std::string& c : constants) sig.AddConstant(c);

  absl::StatusOr<std::shared_ptr<const AtomUniverse>> universe =
      AtomUniverse::Create(std::move(sig), options.node_budget);
  if (!universe.ok()) {
    result.budget_exceeded = true;
    return result;
  }
  GroundCircuit circuit(*universe, options.node_budget);
  absl::StatusOr<GroundCircuit::NodeId> gr = circuit.Add(g);
  absl::StatusOr<GroundCircuit::NodeId> pr =
      gr.ok() ? circuit.Add(p) : gr.status();
  if (!gr.ok() || !pr.ok()) {
    result.budget_exceeded = true;
    return result;
  }

  const GroundCircuit::NodeId roots[] = {*gr, *pr};
  const std::vector<uint32_t> atoms = circuit.AtomsReachableFrom(roots);
  result.atoms = atoms.size();
  std::vector<uint64_t> words(circuit.num_atoms(), 0);

  auto tally = [&](uint64_t lanes) {
    const std::vector<uint64_t> v = circuit.EvalWords(words);
    result.agreeing += static_cast<uint64_t>(
        std::popcount(~(v[*gr] ^ v[*pr]) & lanes));
  };

  if (atoms.size() <= options.exhaustive_atom_limit) {
    const size_t m = atoms.size();
    result.rows = uint64_t{1} << m;
    for (uint64_t base = 0; base < result.rows; base += 64) {
      for (size_t i = 0; i < m; ++i) {
        words[atoms[i]] =
            i < 6 ? kRowBit[i] : (((base >> i) & 1) != 0 ? ~uint64_t{0} : 0);
      }
      const uint64_t left = result.rows - base;
      tally(left >= 64 ? ~uint64_t{0} : (uint64_t{1} << left) - 1);
    }
  } else {
    result.sampled = true;
    result.rows = options.sample_count;
    std::mt19937_64 rng(options.seed);
    for (uint64_t base = 0; base < result.rows; base += 64) {
      for (uint32_t a : atoms) words[a] = rng();
      const uint64_t left = result.rows - base;
      tally(left >= 64 ? ~uint64_t{0} : (uint64_t{1} << left) - 1);
    }
  }
  result.score = result.rows == 0 ? 0.0
                                  : static_cast<double>(result.agreeing) /
                                        static_cast<double>(result.rows);
  return result;
}

LeResult LeScore(std::string_view gold, std::string_view pred,
                 const LeOptions& options) {
  ParseOutcome g = Parse(gold);
  ParseOutcome p = Parse(pred);
  if (!g.ok() || !p.ok()) {
    LeResult result;
    result.parse_failed = true;
    return result;
  }
  return CompareTruthTables(g.formula(), p.formula(), options);
}

}  // namespace foleval

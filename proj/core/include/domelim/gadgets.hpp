// Copyright 2026 The domelim Authors
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

#ifndef DOMELIM_GADGETS_HPP_
#define DOMELIM_GADGETS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "domelim/circuits.hpp"
#include "domelim/cnf.hpp"
#include "domelim/game.hpp"
#include "domelim/graphs.hpp"

namespace domelim {

// A game constructed from a source object (graph, circuit, formula) so that
// eliminability of `target` answers a question about the source. `semantics`
// records what a YES means, including polarity: for the cycle-reachability
// gadgets the target is eliminable exactly when NO cycle is reachable.
struct GadgetOutput {
  Game game{1, 1};
  PlayerRole target_role = PlayerRole::kRow;
  int target_index = 0;
  std::vector<std::string> row_names;
  std::vector<std::string> col_names;
  std::string semantics;

  const std::string& target_name() const {
    return target_role == PlayerRole::kRow ? row_names[target_index]
                                           : col_names[target_index];
  }
  // Index of a named strategy, or nullopt.
  std::optional<int> row_named(const std::string& name) const;
  std::optional<int> col_named(const std::string& name) const;
};

// --- cycle reachability to strict elimination ---

// Two payoff values. Vertices of the (internally subdivided) graph become
// strategies, edges become payoff-1 cells, and each player gets one always-1
// strategy. A vertex strategy is strictly eliminable iff no cycle is
// reachable from it; the target is the source vertex's strategy.
GadgetOutput gadget_cyclereach_to_2strict(const CycleReachInstance& inst);

// Constant-sum (c = 2), three payoff values, same semantics. The graph is
// subdivided first so it is bipartite and free of 2-cycles.
GadgetOutput gadget_cyclereach_to_3zstrict(const CycleReachInstance& inst);

// --- monotone circuits to elimination ---

// Zero-sum game with values {-1,0,1} from a restricted-form-1 circuit. The
// root's row strategy is eliminable iff the circuit evaluates to true, and
// the answer is the same under weak, dominance and simultaneous elimination.
GadgetOutput gadget_mcv1_to_3z(const MonotoneCircuit& c);

// Three payoff values, not constant-sum; root true iff the root's strategy
// is strictly eliminable.
GadgetOutput gadget_mcv1_to_3strict(const MonotoneCircuit& c);

// Constant-sum (c = 3) with values {0,1,2,3}; requires at least two Or
// vertices; root true iff the root's strategy is strictly eliminable.
GadgetOutput gadget_mcv1_to_4zstrict(const MonotoneCircuit& c);

// Two payoff values from a restricted-form-2 circuit; root true iff the
// root's strategy is eliminable, identically under weak, dominance and
// simultaneous elimination.
GadgetOutput gadget_mcv2_to_2(const MonotoneCircuit& c);

// --- satisfiability to weak elimination ---

// Three payoff values; the designated strategy s is weakly eliminable iff
// the formula is satisfiable.
GadgetOutput gadget_3sat_to_3weak(const Cnf3& f);

// --- binarizations ---

// Best-response indicator game: a cell becomes 1 iff it is a best response,
// plus one always-1 strategy per player. Never-best-response elimination on
// the input corresponds to strict elimination on the output.
Game binarize_best_response(const Game& g);

enum class BenchmarkPolicy { kGlobalMedian, kPerPlayerMedian, kFixed };

// Thresholds every payoff against a benchmark: strictly above becomes 1,
// everything else 0. The default benchmark is the lower median of all
// payoffs; kPerPlayerMedian uses each player's own median; kFixed uses
// `fixed_value`.
Game binarize_benchmark(const Game& g,
                        BenchmarkPolicy policy = BenchmarkPolicy::kGlobalMedian,
                        int fixed_value = 0);

}  // namespace domelim

#endif  // DOMELIM_GADGETS_HPP_

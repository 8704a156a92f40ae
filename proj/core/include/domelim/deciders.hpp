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

#ifndef DOMELIM_DECIDERS_HPP_
#define DOMELIM_DECIDERS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "domelim/game.hpp"
#include "domelim/relations.hpp"

namespace domelim {

// A strategy whose eliminability is in question.
struct Target {
  PlayerRole role = PlayerRole::kRow;
  int index = 0;

  friend bool operator==(const Target&, const Target&) = default;
};

struct DecisionResult {
  bool eliminable = false;
  std::optional<EliminationTrace> trace;  // certificate for a YES
  std::string algorithm;
};

struct SearchBudget {
  // Cap on memoized subgame states for the exhaustive search.
  std::size_t max_states = std::size_t{1} << 26;
  // Cap on rows+cols for the exhaustive search; 26 keeps the worst case near
  // 2^26 states and lets a state pack into one machine word.
  int max_side_sum = 26;
};

struct SearchStats {
  std::size_t states_visited = 0;
};

// Runs elimination to a fixed point. Restricted to the order-invariant
// notions (kStrict, kSimultaneous, kNeverBestResponse): the result does not
// depend on the order candidates are taken in. Without `tie_seed` the first
// candidate in deterministic order is applied each round; with it, a
// seeded pseudo-random candidate, which exists to exercise exactly that
// invariance.
std::pair<Subgame, EliminationTrace> greedy_reduce(
    const Game& g, Notion notion,
    std::optional<std::uint64_t> tie_seed = std::nullopt);

// Like greedy_reduce but for any notion, taking a seeded random candidate
// each round. For kDominance/kWeak different seeds may reach different
// fixed points.
std::pair<Subgame, EliminationTrace> sampled_reduce(const Game& g,
                                                    Notion notion,
                                                    std::uint64_t seed);

// Target eliminable under an order-invariant notion: reduce, test absence.
DecisionResult greedy_decide(const Game& g, Target target, Notion notion);

// Depth-first search over all reachable subgames with memoization; sound
// and complete for every notion within the budget, which makes it the
// universal reference decider. Throws BudgetError when the budget is hit.
DecisionResult exhaustive_decide(const Game& g, Target target, Notion notion,
                                 const SearchBudget& budget = {},
                                 SearchStats* stats = nullptr);

// Constant-sum games only. Repeatedly eliminates any strategy weakly
// dominated by a witness other than the target; in a constant-sum game that
// restriction is enough to make the greedy order optimal.
DecisionResult z_weak_decide(const Game& g, int target_row);

// Constant-sum games only. One greedy dominance pass per protected column
// strategy x: eliminate anything except x, restarting from the full game for
// each choice of x; some column protects the strict inequality needed to
// remove the target iff the target is eliminable at all.
DecisionResult z_dominance_decide(const Game& g, int target_row);

// Constant-sum games whose two payoff values normalize to a = {0,1} with
// b = 1-a. A single phase decides: with an all-1 row the eliminable
// strategies are exactly the all-0 rows, with an all-0 column exactly the
// all-1 columns, otherwise nothing; no iteration can occur.
DecisionResult two_z_strict_decide(const Game& g, Target target);

// Games with at most two payoff values. After one simultaneous round of
// strict elimination, remaining strategies are vertices of a digraph whose
// edges are the payoff-1 cells, and a strategy falls iff no cycle is
// reachable from its vertex.
DecisionResult two_strict_graph_decide(const Game& g, Target target);

// Constant-sum games whose (at most three) payoff values normalize to
// a-values in {0,1,2} with b = 2-a. Reduces to cycle reachability over the
// potentially eliminable strategies; instances with an all-2 row or all-0
// column of `a` are delegated to greedy_decide.
DecisionResult three_z_strict_graph_decide(const Game& g, Target target);

// Never-best-response elimination decided by building the best-response
// indicator game plus one always-best strategy per player and running
// two_strict_graph_decide on it.
DecisionResult response_decide(const Game& g, Target target);

struct OrderDependenceWitness {
  Game game;
  EliminationTrace trace_a;
  EliminationTrace trace_b;
};

// Enumerates every reachable irreducible subgame of `g` under kDominance or
// kWeak and returns two traces into subgames with distinct canonical forms,
// if the outcome is order dependent.
std::optional<OrderDependenceWitness> find_order_dependence(
    const Game& g, Notion notion, const SearchBudget& budget = {});

// Samples random games until one with an order-dependent outcome appears.
std::optional<OrderDependenceWitness> order_dependence_search(
    Notion notion, int max_rows, int max_cols, int max_value, int samples,
    std::uint64_t seed);

// Canonical form of the subgame's payoff restriction: rows and columns
// sorted lexicographically until stable, then serialized.
std::string canonical_subgame_form(const Game& g, const Subgame& s);

// Joint monotone renormalization of the payoff values onto 0..k-1.
Game normalized_values(const Game& g);

}  // namespace domelim

#endif  // DOMELIM_DECIDERS_HPP_

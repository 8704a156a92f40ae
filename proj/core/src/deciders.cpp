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

#include "domelim/deciders.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "domelim/error.hpp"
#include "domelim/gadgets.hpp"
#include "domelim/graphs.hpp"
#include "domelim/sampling.hpp"

namespace domelim {

namespace {

void check_target(const Game& g, Target target) {
  int bound = target.role == PlayerRole::kRow ? g.rows() : g.cols();
  if (target.index < 0 || target.index >= bound)
    throw std::invalid_argument("target strategy out of range");
}

bool order_invariant(Notion notion) {
  return notion == Notion::kStrict || notion == Notion::kSimultaneous ||
         notion == Notion::kNeverBestResponse;
}

// Trace ending right after the step that removes the target (certificates
// need not run to the fixed point).
EliminationTrace truncate_at_target(const EliminationTrace& trace,
                                    Target target) {
  EliminationTrace out;
  out.initial = trace.initial;
  Subgame current = trace.initial;
  for (const Step& step : trace.steps) {
    if (!current.contains(target.role, target.index)) break;
    current = apply_step(current, step);
    out.steps.push_back(step);
  }
  out.final = current;
  return out;
}

DecisionResult make_result(Target target, std::string algorithm,
                           const Subgame& final_subgame,
                           const EliminationTrace& trace) {
  DecisionResult out;
  out.algorithm = std::move(algorithm);
  out.eliminable = !final_subgame.contains(target.role, target.index);
  if (out.eliminable) out.trace = truncate_at_target(trace, target);
  return out;
}

std::uint64_t pack_state(const Subgame& s) {
  return s.rows.packed() | (s.cols.packed() << s.rows.universe());
}

std::pair<Subgame, EliminationTrace> reduce_impl(const Game& g, Notion notion,
                                                 std::uint64_t seed,
                                                 bool randomize) {
  Subgame current = Subgame::full(g);
  EliminationTrace trace;
  trace.initial = current;
  std::mt19937_64 rng(seed);
  for (;;) {
    if (notion == Notion::kSimultaneous) {
      auto step = find_simultaneous_step(g, current);
      if (!step) break;
      current = apply_step(current, *step);
      trace.steps.emplace_back(std::move(*step));
      continue;
    }
    auto candidates = find_candidates(g, current, notion);
    if (candidates.empty()) break;
    std::size_t pick = 0;
    if (randomize)
      pick = std::uniform_int_distribution<std::size_t>(
          0, candidates.size() - 1)(rng);
    current = apply_step(current, candidates[pick]);
    trace.steps.emplace_back(std::move(candidates[pick]));
  }
  trace.final = current;
  return {current, trace};
}

}  // namespace

Game normalized_values(const Game& g) {
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(g.rows()) * g.cols() * 2);
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) {
      values.push_back(g.a(i, j));
      values.push_back(g.b(i, j));
    }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  auto rank = [&values](int v) {
    return static_cast<int>(
        std::lower_bound(values.begin(), values.end(), v) - values.begin());
  };
  Game out(g.rows(), g.cols());
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) {
      out.set_a(i, j, rank(g.a(i, j)));
      out.set_b(i, j, rank(g.b(i, j)));
    }
  return out;
}

std::pair<Subgame, EliminationTrace> greedy_reduce(
    const Game& g, Notion notion, std::optional<std::uint64_t> tie_seed) {
  if (!order_invariant(notion))
    throw PreconditionError(
        "greedy_reduce requires an order-invariant notion (strict, "
        "simultaneous or nbr)");
  return reduce_impl(g, notion, tie_seed.value_or(0), tie_seed.has_value());
}

std::pair<Subgame, EliminationTrace> sampled_reduce(const Game& g,
                                                    Notion notion,
                                                    std::uint64_t seed) {
  return reduce_impl(g, notion, seed, /*randomize=*/true);
}

DecisionResult greedy_decide(const Game& g, Target target, Notion notion) {
  check_target(g, target);
  auto [final_subgame, trace] = greedy_reduce(g, notion);
  return make_result(target, "greedy", final_subgame, trace);
}

namespace {

// Depth-first search over the subgame lattice. States already explored
// without reaching a target-free subgame are memoized, so every state is
// expanded at most once.
class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const Game& g, Target target, Notion notion,
                   const SearchBudget& budget)
      : game_(g), target_(target), notion_(notion), budget_(budget) {}

  DecisionResult run() {
    int side_sum = game_.rows() + game_.cols();
    if (side_sum > budget_.max_side_sum || side_sum > 64)
      throw BudgetError("exhaustive search: rows+cols exceeds the budget");
    DecisionResult out;
    out.algorithm = "exhaustive";
    Subgame full = Subgame::full(game_);
    out.eliminable = search(full);
    if (out.eliminable) {
      EliminationTrace trace;
      trace.initial = full;
      trace.steps = path_;
      Subgame current = full;
      for (const Step& step : path_) current = apply_step(current, step);
      trace.final = current;
      out.trace = std::move(trace);
    }
    return out;
  }

  std::size_t states_visited() const { return explored_.size(); }

 private:
  bool search(const Subgame& s) {
    if (!s.contains(target_.role, target_.index)) return true;
    std::uint64_t key = pack_state(s);
    if (explored_.contains(key)) return false;
    if (explored_.size() >= budget_.max_states)
      throw BudgetError("exhaustive search: state budget exhausted");
    explored_.insert(key);
    if (notion_ == Notion::kSimultaneous) {
      auto step = find_simultaneous_step(game_, s);
      if (!step) return false;
      Subgame next = apply_step(s, *step);
      path_.emplace_back(std::move(*step));
      if (search(next)) return true;
      path_.pop_back();
      return false;
    }
    for (EliminationStep& step : find_candidates(game_, s, notion_)) {
      Subgame next = apply_step(s, step);
      path_.emplace_back(std::move(step));
      if (search(next)) return true;
      path_.pop_back();
    }
    return false;
  }

  const Game& game_;
  Target target_;
  Notion notion_;
  SearchBudget budget_;
  std::unordered_set<std::uint64_t> explored_;
  std::vector<Step> path_;
};

}  // namespace

DecisionResult exhaustive_decide(const Game& g, Target target, Notion notion,
                                 const SearchBudget& budget,
                                 SearchStats* stats) {
  check_target(g, target);
  ExhaustiveSearch search(g, target, notion, budget);
  DecisionResult out = search.run();
  if (stats) stats->states_visited = search.states_visited();
  return out;
}

DecisionResult z_weak_decide(const Game& g, int target_row) {
  if (!constant_sum_of(g))
    throw PreconditionError("z-weak decider requires a constant-sum game");
  check_target(g, Target{PlayerRole::kRow, target_row});
  Subgame current = Subgame::full(g);
  EliminationTrace trace;
  trace.initial = current;
  bool progressed = true;
  while (progressed && current.contains(PlayerRole::kRow, target_row)) {
    progressed = false;
    for (EliminationStep& step : find_candidates(g, current, Notion::kWeak)) {
      // Never eliminate *by* the target; eliminating it is the goal.
      if (step.role == PlayerRole::kRow && step.witness == target_row) {
        EliminationStep retry = step;
        retry.witness = -1;
        for (int w = 0; w < g.rows(); ++w) {
          if (w == target_row || w == step.eliminated ||
              !current.rows.contains(w))
            continue;
          retry.witness = w;
          if (validate_step(g, current, retry)) break;
          retry.witness = -1;
        }
        if (retry.witness < 0) continue;
        step = retry;
      }
      current = apply_step(current, step);
      trace.steps.emplace_back(std::move(step));
      progressed = true;
      break;
    }
  }
  trace.final = current;
  return make_result(Target{PlayerRole::kRow, target_row}, "z-weak",
                     current, trace);
}

DecisionResult z_dominance_decide(const Game& g, int target_row) {
  if (!constant_sum_of(g))
    throw PreconditionError("z-dominance decider requires a constant-sum game");
  Target target{PlayerRole::kRow, target_row};
  check_target(g, target);
  for (int protected_col = 0; protected_col < g.cols(); ++protected_col) {
    Subgame current = Subgame::full(g);
    EliminationTrace trace;
    trace.initial = current;
    bool progressed = true;
    while (progressed && current.contains(PlayerRole::kRow, target_row)) {
      progressed = false;
      for (EliminationStep& step :
           find_candidates(g, current, Notion::kDominance)) {
        if (step.role == PlayerRole::kColumn &&
            step.eliminated == protected_col)
          continue;
        current = apply_step(current, step);
        trace.steps.emplace_back(std::move(step));
        progressed = true;
        break;
      }
    }
    trace.final = current;
    if (!current.contains(PlayerRole::kRow, target_row))
      return make_result(target, "z-dominance", current, trace);
  }
  DecisionResult out;
  out.algorithm = "z-dominance";
  out.eliminable = false;
  return out;
}

DecisionResult two_z_strict_decide(const Game& g, Target target) {
  check_target(g, target);
  if (!constant_sum_of(g))
    throw PreconditionError("2-z-strict decider requires a constant-sum game");
  if (payoff_value_count(g) > 2)
    throw PreconditionError(
        "2-z-strict decider requires at most two payoff values");
  Game norm = normalized_values(g);
  for (int i = 0; i < norm.rows(); ++i)
    for (int j = 0; j < norm.cols(); ++j)
      if (norm.b(i, j) != 1 - norm.a(i, j))
        throw PreconditionError(
            "2-z-strict decider: values do not normalize to b = 1 - a");

  auto row_constant = [&norm](int i, int v) {
    for (int j = 0; j < norm.cols(); ++j)
      if (norm.a(i, j) != v) return false;
    return true;
  };
  auto col_constant = [&norm](int j, int v) {
    for (int i = 0; i < norm.rows(); ++i)
      if (norm.a(i, j) != v) return false;
    return true;
  };

  Subgame current = Subgame::full(g);
  EliminationTrace trace;
  trace.initial = current;
  int ones_row = -1;
  for (int i = 0; i < norm.rows() && ones_row < 0; ++i)
    if (row_constant(i, 1)) ones_row = i;
  if (ones_row >= 0) {
    for (int i = 0; i < norm.rows(); ++i)
      if (row_constant(i, 0)) {
        EliminationStep step{Notion::kStrict, PlayerRole::kRow, i, ones_row, {}};
        current = apply_step(current, step);
        trace.steps.emplace_back(std::move(step));
      }
  } else {
    int zeros_col = -1;
    for (int j = 0; j < norm.cols() && zeros_col < 0; ++j)
      if (col_constant(j, 0)) zeros_col = j;
    if (zeros_col >= 0) {
      for (int j = 0; j < norm.cols(); ++j)
        if (col_constant(j, 1)) {
          EliminationStep step{Notion::kStrict, PlayerRole::kColumn, j,
                               zeros_col, {}};
          current = apply_step(current, step);
          trace.steps.emplace_back(std::move(step));
        }
    }
  }
  trace.final = current;
  return make_result(target, "2z-strict", current, trace);
}

DecisionResult two_strict_graph_decide(const Game& g, Target target) {
  check_target(g, target);
  if (payoff_value_count(g) > 2)
    throw PreconditionError(
        "2-strict graph decider requires at most two payoff values");
  Game norm = normalized_values(g);

  // Round one: remove everything strictly dominated in the initial game.
  Subgame current = Subgame::full(g);
  EliminationTrace trace;
  trace.initial = current;
  for (EliminationStep& step :
       find_candidates(norm, current, Notion::kStrict)) {
    step.notion = Notion::kStrict;
    current = apply_step(current, step);
    trace.steps.emplace_back(std::move(step));
  }

  // The iteration can continue only if both players still own an always-1
  // strategy; otherwise round one already was the fixed point.
  std::vector<int> live_rows = current.rows.members();
  std::vector<int> live_cols = current.cols.members();
  auto all_ones_row = [&](int i) {
    for (int j : live_cols)
      if (norm.a(i, j) != 1) return false;
    return true;
  };
  auto all_ones_col = [&](int j) {
    for (int i : live_rows)
      if (norm.b(i, j) != 1) return false;
    return true;
  };
  bool row_anchor = std::any_of(live_rows.begin(), live_rows.end(), all_ones_row);
  bool col_anchor = std::any_of(live_cols.begin(), live_cols.end(), all_ones_col);
  if (!row_anchor || !col_anchor) {
    trace.final = current;
    return make_result(target, "2strict-graph", current, trace);
  }

  // Strategy graph: an edge means "this strategy still earns 1 here".
  int nr = static_cast<int>(live_rows.size());
  int nc = static_cast<int>(live_cols.size());
  Digraph graph(nr + nc);
  for (int ri = 0; ri < nr; ++ri)
    for (int ci = 0; ci < nc; ++ci) {
      if (norm.a(live_rows[ri], live_cols[ci]) == 1)
        graph.add_edge(ri, nr + ci);
      if (norm.b(live_rows[ri], live_cols[ci]) == 1)
        graph.add_edge(nr + ci, ri);
    }

  // The always-1 strategy of a player survives every round and strictly
  // beats any strategy whose payoff-1 cells are all gone.
  auto current_row_anchor = [&]() {
    for (int w : current.rows.members()) {
      bool ones = true;
      for (int j : current.cols.members()) ones = ones && norm.a(w, j) == 1;
      if (ones) return w;
    }
    return -1;
  };
  auto current_col_anchor = [&]() {
    for (int w : current.cols.members()) {
      bool ones = true;
      for (int i : current.rows.members()) ones = ones && norm.b(i, w) == 1;
      if (ones) return w;
    }
    return -1;
  };
  for (int vertex : peel_to_cycles(graph)) {
    bool is_row = vertex < nr;
    EliminationStep step;
    step.notion = Notion::kStrict;
    step.role = is_row ? PlayerRole::kRow : PlayerRole::kColumn;
    step.eliminated = is_row ? live_rows[vertex] : live_cols[vertex - nr];
    step.witness = is_row ? current_row_anchor() : current_col_anchor();
    current = apply_step(current, step);
    trace.steps.emplace_back(std::move(step));
  }
  trace.final = current;
  return make_result(target, "2strict-graph", current, trace);
}

DecisionResult three_z_strict_graph_decide(const Game& g, Target target) {
  check_target(g, target);
  if (!constant_sum_of(g))
    throw PreconditionError("3-z-strict decider requires a constant-sum game");
  if (payoff_value_count(g) > 3)
    throw PreconditionError(
        "3-z-strict decider requires at most three payoff values");

  // Symmetric renormalization onto {0,1,2} with b = 2 - a. Constant-sum
  // forces the value set to mirror around c/2, so only the arity matters.
  std::vector<int> values;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) {
      values.push_back(g.a(i, j));
      values.push_back(g.b(i, j));
    }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::map<int, int> remap;
  if (values.size() == 1) {
    remap[values[0]] = 1;
  } else if (values.size() == 2) {
    remap[values[0]] = 0;
    remap[values[1]] = 2;
  } else {
    remap[values[0]] = 0;
    remap[values[1]] = 1;
    remap[values[2]] = 2;
  }
  Game norm(g.rows(), g.cols());
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) {
      norm.set_a(i, j, remap[g.a(i, j)]);
      norm.set_b(i, j, remap[g.b(i, j)]);
      if (norm.b(i, j) != 2 - norm.a(i, j))
        throw PreconditionError(
            "3-z-strict decider: values do not normalize to b = 2 - a");
    }

  // With an all-2 row or all-0 column the structural argument below does
  // not apply; those instances are easy and go to the greedy decider.
  for (int i = 0; i < norm.rows(); ++i) {
    bool all2 = true;
    for (int j = 0; j < norm.cols(); ++j) all2 = all2 && norm.a(i, j) == 2;
    if (all2) {
      DecisionResult out = greedy_decide(g, target, Notion::kStrict);
      out.algorithm = "3z-strict-graph";
      return out;
    }
  }
  for (int j = 0; j < norm.cols(); ++j) {
    bool all0 = true;
    for (int i = 0; i < norm.rows(); ++i) all0 = all0 && norm.a(i, j) == 0;
    if (all0) {
      DecisionResult out = greedy_decide(g, target, Notion::kStrict);
      out.algorithm = "3z-strict-graph";
      return out;
    }
  }

  // Potential dominators never contain the opponent-best value; potential
  // victims must lose outright against every potential dominator.
  std::vector<int> dominating_rows, dominating_cols;
  for (int i = 0; i < norm.rows(); ++i) {
    bool no_zero = true;
    for (int j = 0; j < norm.cols(); ++j) no_zero = no_zero && norm.a(i, j) != 0;
    if (no_zero) dominating_rows.push_back(i);
  }
  for (int j = 0; j < norm.cols(); ++j) {
    bool no_two = true;
    for (int i = 0; i < norm.rows(); ++i) no_two = no_two && norm.a(i, j) != 2;
    if (no_two) dominating_cols.push_back(j);
  }
  std::vector<int> eliminable_rows, eliminable_cols;
  std::vector<bool> row_eliminable(norm.rows(), false);
  std::vector<bool> col_eliminable(norm.cols(), false);
  for (int i = 0; i < norm.rows(); ++i) {
    bool candidate = true;
    for (int u : dominating_cols) candidate = candidate && norm.a(i, u) == 0;
    if (candidate) {
      row_eliminable[i] = true;
      eliminable_rows.push_back(i);
    }
  }
  for (int j = 0; j < norm.cols(); ++j) {
    bool candidate = true;
    for (int r : dominating_rows) candidate = candidate && norm.a(r, j) == 2;
    if (candidate) {
      col_eliminable[j] = true;
      eliminable_cols.push_back(j);
    }
  }

  if ((target.role == PlayerRole::kRow && !row_eliminable[target.index]) ||
      (target.role == PlayerRole::kColumn && !col_eliminable[target.index])) {
    DecisionResult out;
    out.algorithm = "3z-strict-graph";
    out.eliminable = false;
    return out;
  }

  // A strategy keeps a successor while it still earns its best value against
  // some present counterpart; a dominator that beats it everywhere else must
  // exist, or the strategy is stuck forever (modeled as a fresh cycle).
  int nr = static_cast<int>(eliminable_rows.size());
  int nc = static_cast<int>(eliminable_cols.size());
  std::vector<int> row_backup(nr, -1), col_backup(nc, -1);
  int synthetic = 0;
  for (int ri = 0; ri < nr; ++ri) {
    for (int w : dominating_rows) {
      bool beats = true;
      for (int j = 0; j < norm.cols(); ++j)
        if (!col_eliminable[j] && norm.a(w, j) <= norm.a(eliminable_rows[ri], j)) {
          beats = false;
          break;
        }
      if (beats) {
        row_backup[ri] = w;
        break;
      }
    }
    if (row_backup[ri] < 0) synthetic += 2;
  }
  for (int ci = 0; ci < nc; ++ci) {
    for (int w : dominating_cols) {
      bool beats = true;
      for (int i = 0; i < norm.rows(); ++i)
        if (!row_eliminable[i] && norm.a(i, w) >= norm.a(i, eliminable_cols[ci])) {
          beats = false;
          break;
        }
      if (beats) {
        col_backup[ci] = w;
        break;
      }
    }
    if (col_backup[ci] < 0) synthetic += 2;
  }

  Digraph graph(nr + nc + synthetic);
  for (int ri = 0; ri < nr; ++ri)
    for (int ci = 0; ci < nc; ++ci) {
      int value = norm.a(eliminable_rows[ri], eliminable_cols[ci]);
      if (value == 2) graph.add_edge(ri, nr + ci);
      if (value == 0) graph.add_edge(nr + ci, ri);
    }
  int next_synthetic = nr + nc;
  auto attach_cycle = [&graph, &next_synthetic](int from) {
    int x = next_synthetic++;
    int y = next_synthetic++;
    graph.add_edge(x, y);
    graph.add_edge(y, x);
    graph.add_edge(from, x);
  };
  for (int ri = 0; ri < nr; ++ri)
    if (row_backup[ri] < 0) attach_cycle(ri);
  for (int ci = 0; ci < nc; ++ci)
    if (col_backup[ci] < 0) attach_cycle(nr + ci);

  Subgame current = Subgame::full(g);
  EliminationTrace trace;
  trace.initial = current;
  for (int vertex : peel_to_cycles(graph)) {
    if (vertex >= nr + nc) continue;  // synthetic cycles never peel anyway
    bool is_row = vertex < nr;
    EliminationStep step;
    step.notion = Notion::kStrict;
    step.role = is_row ? PlayerRole::kRow : PlayerRole::kColumn;
    step.eliminated = is_row ? eliminable_rows[vertex]
                             : eliminable_cols[vertex - nr];
    step.witness = is_row ? row_backup[vertex] : col_backup[vertex - nr];
    current = apply_step(current, step);
    trace.steps.emplace_back(std::move(step));
  }
  trace.final = current;
  return make_result(target, "3z-strict-graph", current, trace);
}

DecisionResult response_decide(const Game& g, Target target) {
  check_target(g, target);
  Game indicator = binarize_best_response(g);
  DecisionResult inner = two_strict_graph_decide(indicator, target);
  DecisionResult out;
  out.algorithm = "response";
  out.eliminable = inner.eliminable;
  if (!inner.eliminable || !inner.trace) return out;

  // Replay the indicator-game order as never-best-response steps on the
  // original game. Victims are always original strategies: the two added
  // always-1 strategies are never dominated.
  Subgame current = Subgame::full(g);
  EliminationTrace trace;
  trace.initial = current;
  for (const Step& raw : inner.trace->steps) {
    const auto& strict_step = std::get<EliminationStep>(raw);
    EliminationStep step;
    step.notion = Notion::kNeverBestResponse;
    step.role = strict_step.role;
    step.eliminated = strict_step.eliminated;
    auto payoff = [&g, &step](int own, int opp) {
      return step.role == PlayerRole::kRow ? g.a(own, opp) : g.b(opp, own);
    };
    const StrategySet& own = current.side(step.role);
    const StrategySet& opp = current.side(opponent(step.role));
    for (int o = 0; o < opp.universe(); ++o) {
      if (!opp.contains(o)) continue;
      for (int w = 0; w < own.universe(); ++w) {
        if (!own.contains(w)) continue;
        if (payoff(w, o) > payoff(step.eliminated, o)) {
          step.response_witnesses.emplace_back(o, w);
          break;
        }
      }
    }
    current = apply_step(current, step);
    trace.steps.emplace_back(std::move(step));
    if (!current.contains(target.role, target.index)) break;
  }
  trace.final = current;
  out.trace = std::move(trace);
  return out;
}

std::string canonical_subgame_form(const Game& g, const Subgame& s) {
  std::vector<std::vector<std::pair<int, int>>> cells;
  for (int i : s.rows.members()) {
    std::vector<std::pair<int, int>> row;
    for (int j : s.cols.members()) row.emplace_back(g.a(i, j), g.b(i, j));
    cells.push_back(std::move(row));
  }
  auto column_of = [&cells](std::size_t j) {
    std::vector<std::pair<int, int>> col;
    col.reserve(cells.size());
    for (const auto& row : cells) col.push_back(row[j]);
    return col;
  };
  for (int pass = 0; pass < 16; ++pass) {
    auto before = cells;
    std::sort(cells.begin(), cells.end());
    if (!cells.empty()) {
      std::size_t m = cells[0].size();
      std::vector<std::size_t> perm(m);
      for (std::size_t j = 0; j < m; ++j) perm[j] = j;
      std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
        return column_of(x) < column_of(y);
      });
      for (auto& row : cells) {
        auto old = row;
        for (std::size_t j = 0; j < m; ++j) row[j] = old[perm[j]];
      }
    }
    if (cells == before) break;
  }
  std::ostringstream os;
  os << cells.size() << "x" << (cells.empty() ? 0 : cells[0].size());
  for (const auto& row : cells)
    for (auto [a, b] : row) os << " " << a << "," << b;
  return os.str();
}

std::optional<OrderDependenceWitness> find_order_dependence(
    const Game& g, Notion notion, const SearchBudget& budget) {
  if (notion != Notion::kDominance && notion != Notion::kWeak)
    throw PreconditionError(
        "order dependence search applies to dominance and weak elimination "
        "only");
  int side_sum = g.rows() + g.cols();
  if (side_sum > budget.max_side_sum || side_sum > 64)
    throw BudgetError("order dependence search: game exceeds the budget");

  std::unordered_set<std::uint64_t> explored;
  std::vector<Step> path;
  std::map<std::string, EliminationTrace> terminal_forms;
  Subgame full = Subgame::full(g);

  std::optional<OrderDependenceWitness> witness;
  auto record_terminal = [&](const Subgame& s) {
    std::string canon = canonical_subgame_form(g, s);
    if (terminal_forms.contains(canon)) return false;
    EliminationTrace trace;
    trace.initial = full;
    trace.steps = path;
    trace.final = s;
    terminal_forms.emplace(std::move(canon), std::move(trace));
    if (terminal_forms.size() >= 2) {
      auto it = terminal_forms.begin();
      const EliminationTrace& a = it->second;
      const EliminationTrace& b = (++it)->second;
      witness = OrderDependenceWitness{g, a, b};
      return true;
    }
    return false;
  };

  // Plain depth-first enumeration of reachable states; stops as soon as two
  // distinct irreducible forms have been seen.
  auto dfs = [&](auto&& self, const Subgame& s) -> bool {
    std::uint64_t key = pack_state(s);
    if (explored.contains(key)) return false;
    if (explored.size() >= budget.max_states)
      throw BudgetError("order dependence search: state budget exhausted");
    explored.insert(key);
    auto candidates = find_candidates(g, s, notion);
    if (candidates.empty()) return record_terminal(s);
    for (EliminationStep& step : candidates) {
      Subgame next = apply_step(s, step);
      path.emplace_back(std::move(step));
      if (self(self, next)) return true;
      path.pop_back();
    }
    return false;
  };
  dfs(dfs, full);
  return witness;
}

std::optional<OrderDependenceWitness> order_dependence_search(
    Notion notion, int max_rows, int max_cols, int max_value, int samples,
    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    Game g = random_game(rng, max_rows, max_cols, 0, max_value);
    if (auto witness = find_order_dependence(g, notion)) return witness;
  }
  return std::nullopt;
}

}  // namespace domelim

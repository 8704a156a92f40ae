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

#include "domelim/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "domelim/deciders.hpp"
#include "domelim/error.hpp"
#include "domelim/gadgets.hpp"
#include "domelim/io.hpp"
#include "domelim/sampling.hpp"

namespace domelim {

namespace {

// Accumulates one named sub-check: counts cases, keeps the first
// counterexample only.
class Check {
 public:
  Check(SuiteResult& result, std::string name)
      : result_(result), name_(std::move(name)) {}

  ~Check() {
    std::ostringstream os;
    os << name_ << ": " << run_ - failed_ << "/" << run_;
    if (failed_ > 0) os << " FAILED\n" << first_failure_;
    result_.lines.push_back(os.str());
    ++result_.checks;
    if (failed_ > 0) ++result_.failures;
  }

  void record(bool pass, const std::string& counterexample) {
    ++run_;
    if (!pass && failed_++ == 0) first_failure_ = counterexample;
  }

 private:
  SuiteResult& result_;
  std::string name_;
  int run_ = 0;
  int failed_ = 0;
  std::string first_failure_;
};

bool yes_trace_validates(const Game& g, const DecisionResult& result,
                         Target target) {
  if (!result.eliminable) return true;
  if (!result.trace) return true;
  return validate_trace(g, *result.trace) &&
         !result.trace->final.contains(target.role, target.index);
}

std::vector<Target> all_targets(const Game& g) {
  std::vector<Target> out;
  for (int i = 0; i < g.rows(); ++i) out.push_back({PlayerRole::kRow, i});
  for (int j = 0; j < g.cols(); ++j) out.push_back({PlayerRole::kColumn, j});
  return out;
}

std::set<std::pair<PlayerRole, int>> victims(
    const std::vector<EliminationStep>& steps) {
  std::set<std::pair<PlayerRole, int>> out;
  for (const auto& step : steps) out.emplace(step.role, step.eliminated);
  return out;
}

}  // namespace

SuiteResult run_decider_suite(const SuiteOptions& options) {
  SuiteResult result;
  std::mt19937_64 rng(options.seed);

  {
    Check uniqueness(result, "strict-uniqueness");
    Check agreement(result, "greedy-vs-exhaustive");
    for (int n = 0; n < options.count; ++n) {
      Game g = random_game(rng, options.max_size, options.max_size, 0, 3);
      auto [reduced, trace] = greedy_reduce(g, Notion::kStrict);
      bool same = true;
      for (int t = 0; t < 6 && same; ++t)
        same = greedy_reduce(g, Notion::kStrict, rng()).first == reduced;
      uniqueness.record(same, serialize_game(g));
      bool agree = true;
      for (Notion notion : {Notion::kStrict, Notion::kSimultaneous,
                            Notion::kNeverBestResponse}) {
        for (Target target : all_targets(g)) {
          DecisionResult greedy = greedy_decide(g, target, notion);
          DecisionResult exhaustive = exhaustive_decide(g, target, notion);
          agree = agree && greedy.eliminable == exhaustive.eliminable &&
                  yes_trace_validates(g, greedy, target) &&
                  yes_trace_validates(g, exhaustive, target);
        }
      }
      agreement.record(agree, serialize_game(g));
    }
  }
  {
    Check zweak(result, "z-weak-vs-exhaustive");
    Check zdom(result, "z-dominance-vs-exhaustive");
    for (int n = 0; n < options.count; ++n) {
      Game g = random_constant_sum_game(rng, options.max_size,
                                        options.max_size, 4);
      bool weak_ok = true, dom_ok = true;
      for (int target = 0; target < g.rows(); ++target) {
        Target t{PlayerRole::kRow, target};
        DecisionResult zw = z_weak_decide(g, target);
        weak_ok = weak_ok &&
                  zw.eliminable ==
                      exhaustive_decide(g, t, Notion::kWeak).eliminable &&
                  yes_trace_validates(g, zw, t);
        DecisionResult zd = z_dominance_decide(g, target);
        dom_ok = dom_ok &&
                 zd.eliminable ==
                     exhaustive_decide(g, t, Notion::kDominance).eliminable &&
                 yes_trace_validates(g, zd, t);
      }
      zweak.record(weak_ok, serialize_game(g));
      zdom.record(dom_ok, serialize_game(g));
    }
  }
  {
    Check two_z(result, "2z-strict-vs-greedy");
    for (int n = 0; n < options.count; ++n) {
      int rows = std::uniform_int_distribution<int>(1, options.max_size)(rng);
      int cols = std::uniform_int_distribution<int>(1, options.max_size)(rng);
      Game g(rows, cols);
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
          int a = std::uniform_int_distribution<int>(0, 1)(rng);
          g.set_a(i, j, a);
          g.set_b(i, j, 1 - a);
        }
      bool ok = true;
      for (Target target : all_targets(g)) {
        DecisionResult fast = two_z_strict_decide(g, target);
        ok = ok &&
             fast.eliminable ==
                 greedy_decide(g, target, Notion::kStrict).eliminable &&
             yes_trace_validates(g, fast, target);
      }
      two_z.record(ok, serialize_game(g));
    }
  }
  {
    Check two_graph(result, "2strict-graph-vs-greedy");
    for (int n = 0; n < options.count; ++n) {
      Game g = random_two_value_game(rng, options.max_size + 1,
                                     options.max_size + 1);
      bool ok = true;
      for (Target target : all_targets(g)) {
        DecisionResult fast = two_strict_graph_decide(g, target);
        ok = ok &&
             fast.eliminable ==
                 greedy_decide(g, target, Notion::kStrict).eliminable &&
             yes_trace_validates(g, fast, target);
      }
      two_graph.record(ok, serialize_game(g));
    }
  }
  {
    Check three_graph(result, "3z-strict-graph-vs-greedy");
    for (int n = 0; n < options.count; ++n) {
      Game g = random_three_value_constant_sum_game(rng, options.max_size,
                                                    options.max_size);
      bool ok = true;
      for (Target target : all_targets(g)) {
        DecisionResult fast = three_z_strict_graph_decide(g, target);
        ok = ok &&
             fast.eliminable ==
                 greedy_decide(g, target, Notion::kStrict).eliminable &&
             yes_trace_validates(g, fast, target);
      }
      three_graph.record(ok, serialize_game(g));
    }
  }
  {
    Check response(result, "response-vs-greedy-nbr");
    for (int n = 0; n < options.count; ++n) {
      Game g = random_game(rng, options.max_size, options.max_size, 0, 3);
      bool ok = true;
      for (Target target : all_targets(g)) {
        DecisionResult fast = response_decide(g, target);
        ok = ok &&
             fast.eliminable ==
                 greedy_decide(g, target, Notion::kNeverBestResponse)
                     .eliminable &&
             yes_trace_validates(g, fast, target);
      }
      response.record(ok, serialize_game(g));
    }
  }
  return result;
}

SuiteResult run_gadget_suite(const SuiteOptions& options) {
  SuiteResult result;
  std::mt19937_64 rng(options.seed);

  {
    Check two_strict(result, "cyclereach-2strict-equivalence");
    Check three_z(result, "cyclereach-3zstrict-equivalence");
    for (int n = 0; n < options.count; ++n) {
      Digraph graph = random_digraph(
          rng, std::max(2, options.max_size),
          std::uniform_real_distribution<double>(0.1, 0.5)(rng), true);
      GadgetOutput g2 = gadget_cyclereach_to_2strict({graph, 0});
      GadgetOutput g3 = gadget_cyclereach_to_3zstrict({graph, 0});
      bool ok2 = payoff_value_count(g2.game) <= 2;
      bool ok3 = payoff_value_count(g3.game) <= 3 &&
                 constant_sum_of(g3.game) == std::optional<int>(2);
      for (int w = 0; w < graph.vertex_count(); ++w) {
        bool reaches = cycle_reach(graph, w);
        Target t2{PlayerRole::kRow, *g2.row_named("s_v" + std::to_string(w + 1))};
        Target t3{PlayerRole::kRow, *g3.row_named("s_v" + std::to_string(w + 1))};
        ok2 = ok2 && greedy_decide(g2.game, t2, Notion::kStrict).eliminable ==
                         !reaches;
        ok3 = ok3 && greedy_decide(g3.game, t3, Notion::kStrict).eliminable ==
                         !reaches;
      }
      // The always-1 strategies survive every run.
      auto [sub2, trace2] = greedy_reduce(g2.game, Notion::kStrict);
      ok2 = ok2 && sub2.contains(PlayerRole::kRow, *g2.row_named("r*")) &&
            sub2.contains(PlayerRole::kColumn, *g2.col_named("c*"));
      auto [sub3, trace3] = greedy_reduce(g3.game, Notion::kStrict);
      ok3 = ok3 && sub3.contains(PlayerRole::kRow, *g3.row_named("s")) &&
            sub3.contains(PlayerRole::kColumn, *g3.col_named("t"));
      two_strict.record(ok2, serialize_graph(graph));
      three_z.record(ok3, serialize_graph(graph));
    }
  }
  {
    Check mcv1_3z(result, "mcv1-3z-equivalence");
    Check mcv1_3strict(result, "mcv1-3strict-equivalence");
    Check mcv1_4z(result, "mcv1-4zstrict-equivalence");
    for (int n = 0; n < options.count; ++n) {
      int size = std::uniform_int_distribution<int>(8, 8 + options.max_size)(rng);
      MonotoneCircuit circuit = random_mcv(McvFlavor::kMcv1, size, rng());
      bool value = eval_circuit(circuit).root;

      GadgetOutput z3 = gadget_mcv1_to_3z(circuit);
      Target t3{z3.target_role, z3.target_index};
      bool ok = payoff_value_count(z3.game) <= 3 &&
                constant_sum_of(z3.game) == std::optional<int>(0) &&
                z_weak_decide(z3.game, z3.target_index).eliminable == value &&
                z_dominance_decide(z3.game, z3.target_index).eliminable ==
                    value &&
                greedy_decide(z3.game, t3, Notion::kSimultaneous).eliminable ==
                    value;
      mcv1_3z.record(ok, serialize_circuit(circuit));

      GadgetOutput s3 = gadget_mcv1_to_3strict(circuit);
      ok = payoff_value_count(s3.game) <= 3 &&
           greedy_decide(s3.game, {s3.target_role, s3.target_index},
                         Notion::kStrict)
                   .eliminable == value;
      mcv1_3strict.record(ok, serialize_circuit(circuit));

      GadgetOutput z4 = gadget_mcv1_to_4zstrict(circuit);
      ok = payoff_value_count(z4.game) <= 4 &&
           constant_sum_of(z4.game) == std::optional<int>(3) &&
           greedy_decide(z4.game, {z4.target_role, z4.target_index},
                         Notion::kStrict)
                   .eliminable == value;
      mcv1_4z.record(ok, serialize_circuit(circuit));
    }
  }
  {
    Check mcv2(result, "mcv2-2-equivalence");
    for (int n = 0; n < options.count; ++n) {
      int size = std::uniform_int_distribution<int>(4, 4 + options.max_size)(rng);
      MonotoneCircuit circuit = random_mcv(McvFlavor::kMcv2, size, rng());
      bool value = eval_circuit(circuit).root;
      GadgetOutput g = gadget_mcv2_to_2(circuit);
      Target t{g.target_role, g.target_index};
      bool weak = exhaustive_decide(g.game, t, Notion::kWeak).eliminable;
      bool dominance =
          exhaustive_decide(g.game, t, Notion::kDominance).eliminable;
      bool simultaneous =
          greedy_decide(g.game, t, Notion::kSimultaneous).eliminable;
      bool ok = payoff_value_count(g.game) <= 2 && weak == value &&
                dominance == value && simultaneous == value;
      mcv2.record(ok, serialize_circuit(circuit));
    }
  }
  {
    Check sat(result, "3sat-3weak-equivalence");
    for (int n = 0; n < options.count; ++n) {
      Cnf3 f = random_cnf3(rng, 3, std::uniform_int_distribution<int>(1, 3)(rng));
      GadgetOutput g = gadget_3sat_to_3weak(f);
      Target t{g.target_role, g.target_index};
      bool ok = payoff_value_count(g.game) <= 3 &&
                exhaustive_decide(g.game, t, Notion::kWeak).eliminable ==
                    sat_brute_force(f);
      sat.record(ok, serialize_dimacs(f));
    }
  }
  {
    Check response(result, "binarize-response");
    Check benchmark(result, "binarize-benchmark");
    for (int n = 0; n < options.count; ++n) {
      Game g = random_game(rng, options.max_size, options.max_size, -3, 6);
      Game indicator = binarize_best_response(g);
      response.record(payoff_value_count(indicator) <= 2, serialize_game(g));
      Game binary = binarize_benchmark(g);
      benchmark.record(payoff_value_count(binary) <= 2, serialize_game(g));
    }
  }
  return result;
}

SuiteResult run_invariant_suite(const SuiteOptions& options) {
  SuiteResult result;
  std::mt19937_64 rng(options.seed);

  {
    Check inclusion(result, "candidate-inclusions");
    Check simultaneous(result, "simultaneous-maximality");
    Check relabel(result, "monotone-relabeling");
    Check nash(result, "nash-preservation");
    Check memo(result, "exhaustive-memoization");
    for (int n = 0; n < options.count; ++n) {
      Game g = random_game(rng, options.max_size, options.max_size, 0, 3);
      Subgame full = Subgame::full(g);
      auto strict = victims(find_candidates(g, full, Notion::kStrict));
      auto dominance = victims(find_candidates(g, full, Notion::kDominance));
      auto weak = victims(find_candidates(g, full, Notion::kWeak));
      auto nbr = victims(find_candidates(g, full, Notion::kNeverBestResponse));
      bool ok = std::includes(dominance.begin(), dominance.end(),
                              strict.begin(), strict.end()) &&
                std::includes(weak.begin(), weak.end(), dominance.begin(),
                              dominance.end()) &&
                std::includes(nbr.begin(), nbr.end(), strict.begin(),
                              strict.end());
      inclusion.record(ok, serialize_game(g));

      auto step = find_simultaneous_step(g, full);
      std::set<std::pair<PlayerRole, int>> simultaneous_set;
      if (step) {
        for (int v : step->rows) simultaneous_set.emplace(PlayerRole::kRow, v);
        for (int v : step->cols)
          simultaneous_set.emplace(PlayerRole::kColumn, v);
      }
      bool max_ok = simultaneous_set == dominance;
      if (step)
        max_ok = max_ok && validate_step(g, full, *step) &&
                 static_cast<int>(step->rows.size()) < g.rows() &&
                 static_cast<int>(step->cols.size()) < g.cols();
      simultaneous.record(max_ok, serialize_game(g));

      // Strictly increasing random relabelings of each matrix.
      auto relabeled = [&rng](const Game& game, bool rows_matrix) {
        std::vector<int> values;
        for (int i = 0; i < game.rows(); ++i)
          for (int j = 0; j < game.cols(); ++j)
            values.push_back(rows_matrix ? game.a(i, j) : game.b(i, j));
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        std::map<int, int> map;
        int out = std::uniform_int_distribution<int>(-20, 0)(rng);
        for (int v : values) {
          out += std::uniform_int_distribution<int>(1, 9)(rng);
          map[v] = out;
        }
        return map;
      };
      auto fa = relabeled(g, true);
      auto fb = relabeled(g, false);
      Game h(g.rows(), g.cols());
      for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) {
          h.set_a(i, j, fa[g.a(i, j)]);
          h.set_b(i, j, fb[g.b(i, j)]);
        }
      bool relabel_ok = true;
      for (Notion notion : {Notion::kStrict, Notion::kDominance, Notion::kWeak,
                            Notion::kNeverBestResponse})
        relabel_ok = relabel_ok && find_candidates(g, full, notion) ==
                                       find_candidates(h, full, notion);
      relabel_ok =
          relabel_ok && find_simultaneous_step(g, full) ==
                            find_simultaneous_step(h, full);
      relabel.record(relabel_ok, serialize_game(g));

      auto nash_full = pure_nash(g, full);
      auto [strict_min, strict_trace] = greedy_reduce(g, Notion::kStrict);
      bool nash_ok = pure_nash(g, strict_min) == nash_full;
      for (int s = 0; s < 3 && nash_ok; ++s) {
        for (Notion notion : {Notion::kWeak, Notion::kDominance}) {
          auto [reduced, trace] = sampled_reduce(g, notion, rng());
          auto nash_reduced = pure_nash(g, reduced);
          nash_ok = nash_ok &&
                    std::includes(nash_full.begin(), nash_full.end(),
                                  nash_reduced.begin(), nash_reduced.end()) &&
                    validate_trace(g, trace);
        }
      }
      nash.record(nash_ok, serialize_game(g));

      SearchStats first, second;
      Target target{PlayerRole::kRow, 0};
      exhaustive_decide(g, target, Notion::kWeak, {}, &first);
      exhaustive_decide(g, target, Notion::kWeak, {}, &second);
      std::size_t bound = std::size_t{1} << (g.rows() + g.cols());
      memo.record(first.states_visited == second.states_visited &&
                      first.states_visited <= bound,
                  serialize_game(g));
    }
  }
  {
    Check roundtrip(result, "serialization-round-trips");
    for (int n = 0; n < options.count; ++n) {
      Game g = random_game(rng, options.max_size, options.max_size, -9, 9);
      bool ok = parse_game(serialize_game(g)) == g;
      MonotoneCircuit c1 = random_mcv(McvFlavor::kMcv1, 10, rng());
      MonotoneCircuit c2 = random_mcv(McvFlavor::kMcv2, 10, rng());
      ok = ok && parse_circuit(serialize_circuit(c1)) == c1 &&
           parse_circuit(serialize_circuit(c2)) == c2;
      Digraph graph = random_digraph(rng, 6, 0.3, true);
      ok = ok && parse_graph(serialize_graph(graph, 0)).graph == graph;
      Cnf3 f = random_cnf3(rng, 4, 3);
      Cnf3 f2 = parse_dimacs(serialize_dimacs(f));
      ok = ok && f2.variable_count == f.variable_count &&
           f2.clauses == f.clauses;
      roundtrip.record(ok, "");
    }
  }
  return result;
}

SuiteResult run_order_dependence_suite(const SuiteOptions& options) {
  (void)options;
  SuiteResult result;
  Check witness(result, "dominance-order-dependence-witness");
  Game g({{1, 0}, {1, 2}, {0, 2}}, {{1, 0}, {1, 1}, {0, 1}});
  auto found = find_order_dependence(g, Notion::kDominance);
  bool ok = found.has_value();
  if (found) {
    ok = validate_trace(g, found->trace_a) &&
         validate_trace(g, found->trace_b) &&
         canonical_subgame_form(g, found->trace_a.final) !=
             canonical_subgame_form(g, found->trace_b.final);
    std::ostringstream os;
    os << "game:\n" << serialize_game(g) << "first order:\n";
    for (const Step& step : found->trace_a.steps)
      os << "  " << describe_step(step) << "\n";
    os << "second order:\n";
    for (const Step& step : found->trace_b.steps)
      os << "  " << describe_step(step) << "\n";
    result.lines.push_back(os.str());
  }
  witness.record(ok, serialize_game(g));
  return result;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "deciders") return run_decider_suite(options);
  if (name == "gadgets") return run_gadget_suite(options);
  if (name == "invariants") return run_invariant_suite(options);
  if (name == "order-dependence") return run_order_dependence_suite(options);
  throw PreconditionError("unknown suite '" + name + "'");
}

}  // namespace domelim

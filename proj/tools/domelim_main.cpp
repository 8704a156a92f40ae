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

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "domelim/deciders.hpp"
#include "domelim/error.hpp"
#include "domelim/gadgets.hpp"
#include "domelim/io.hpp"
#include "domelim/verify.hpp"
#include "json.hpp"

namespace {

using namespace domelim;
using nlohmann::json;

Target parse_target(const std::string& spec, const Game& g) {
  if (spec.size() < 2 || (spec[0] != 'r' && spec[0] != 'c'))
    throw PreconditionError("target must look like r2 or c3");
  int index = 0;
  try {
    index = std::stoi(spec.substr(1));
  } catch (const std::exception&) {
    throw PreconditionError("target must look like r2 or c3");
  }
  PlayerRole role = spec[0] == 'r' ? PlayerRole::kRow : PlayerRole::kColumn;
  int bound = role == PlayerRole::kRow ? g.rows() : g.cols();
  if (index < 1 || index > bound)
    throw PreconditionError("target " + spec + " out of range");
  return Target{role, index - 1};
}

SearchBudget budget_from_environment() {
  SearchBudget budget;
  if (const char* states = std::getenv("ELIM_BUDGET_STATES")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(states, &end, 10);
    if (end && *end == '\0' && value > 0)
      budget.max_states = static_cast<std::size_t>(value);
  }
  return budget;
}

// Swaps the players in a trace so that results computed on the transposed
// game read correctly for the original one.
EliminationTrace swap_trace_roles(const EliminationTrace& trace) {
  EliminationTrace out;
  out.initial = Subgame{trace.initial.cols, trace.initial.rows};
  out.final = Subgame{trace.final.cols, trace.final.rows};
  for (const Step& step : trace.steps) {
    if (const auto* single = std::get_if<EliminationStep>(&step)) {
      EliminationStep swapped = *single;
      swapped.role = opponent(single->role);
      out.steps.push_back(std::move(swapped));
    } else {
      SimultaneousStep swapped = std::get<SimultaneousStep>(step);
      std::swap(swapped.rows, swapped.cols);
      std::swap(swapped.row_witnesses, swapped.col_witnesses);
      out.steps.push_back(std::move(swapped));
    }
  }
  return out;
}

void require_notion(const std::string& algo, Notion got, Notion want) {
  if (got != want)
    throw PreconditionError("--algo " + algo + " decides " + to_string(want) +
                            " elimination, not " + to_string(got));
}

DecisionResult run_decider(const Game& g, Target target, Notion notion,
                           std::string algo, const SearchBudget& budget) {
  if (algo == "auto") {
    switch (notion) {
      case Notion::kStrict:
      case Notion::kSimultaneous:
      case Notion::kNeverBestResponse:
        algo = "greedy";
        break;
      case Notion::kWeak:
        algo = constant_sum_of(g) ? "z-weak" : "exhaustive";
        break;
      case Notion::kDominance:
        algo = constant_sum_of(g) ? "z-dominance" : "exhaustive";
        break;
    }
  }
  if (algo == "greedy") return greedy_decide(g, target, notion);
  if (algo == "exhaustive")
    return exhaustive_decide(g, target, notion, budget);
  if (algo == "z-weak" || algo == "z-dominance") {
    require_notion(algo, notion,
                   algo == "z-weak" ? Notion::kWeak : Notion::kDominance);
    // The constant-sum algorithms take row targets; column questions run on
    // the transposed game.
    if (target.role == PlayerRole::kColumn) {
      Game swapped = transpose_roles(g);
      DecisionResult result = algo == "z-weak"
                                  ? z_weak_decide(swapped, target.index)
                                  : z_dominance_decide(swapped, target.index);
      if (result.trace) result.trace = swap_trace_roles(*result.trace);
      return result;
    }
    return algo == "z-weak" ? z_weak_decide(g, target.index)
                            : z_dominance_decide(g, target.index);
  }
  if (algo == "2z-strict") {
    require_notion(algo, notion, Notion::kStrict);
    return two_z_strict_decide(g, target);
  }
  if (algo == "2strict-graph") {
    require_notion(algo, notion, Notion::kStrict);
    return two_strict_graph_decide(g, target);
  }
  if (algo == "3z-strict-graph") {
    require_notion(algo, notion, Notion::kStrict);
    return three_z_strict_graph_decide(g, target);
  }
  if (algo == "response") {
    require_notion(algo, notion, Notion::kNeverBestResponse);
    return response_decide(g, target);
  }
  throw PreconditionError("unknown algorithm '" + algo + "'");
}

json step_to_json(const Step& step) {
  json out;
  if (const auto* single = std::get_if<EliminationStep>(&step)) {
    out["kind"] = "eliminate";
    out["notion"] = to_string(single->notion);
    out["role"] = to_string(single->role);
    out["index"] = single->eliminated + 1;
    if (single->notion == Notion::kNeverBestResponse) {
      json responses = json::array();
      for (auto [opponent_index, better] : single->response_witnesses)
        responses.push_back(
            {{"opponent", opponent_index + 1}, {"better", better + 1}});
      out["responses"] = std::move(responses);
    } else {
      out["witness"] = single->witness + 1;
    }
  } else {
    const auto& sim = std::get<SimultaneousStep>(step);
    out["kind"] = "eliminate-simultaneous";
    auto side = [](const std::vector<int>& victims,
                   const std::vector<std::pair<int, int>>& witnesses) {
      json list = json::array();
      for (std::size_t k = 0; k < victims.size(); ++k)
        list.push_back({{"index", victims[k] + 1},
                        {"by", witnesses[k].first + 1},
                        {"strict_at", witnesses[k].second + 1}});
      return list;
    };
    out["rows"] = side(sim.rows, sim.row_witnesses);
    out["cols"] = side(sim.cols, sim.col_witnesses);
  }
  return out;
}

int cmd_decide(const std::string& file, const std::string& notion_name,
               const std::string& target_spec, const std::string& algo,
               bool with_trace, bool with_json) {
  Game g = parse_game(read_file(file));
  auto notion = notion_from_string(notion_name);
  if (!notion)
    throw PreconditionError("unknown notion '" + notion_name + "'");
  Target target = parse_target(target_spec, g);
  DecisionResult result =
      run_decider(g, target, *notion, algo, budget_from_environment());

  std::cout << (result.eliminable ? "YES" : "NO") << "\n";
  if (with_trace && result.trace)
    for (const Step& step : result.trace->steps)
      std::cout << describe_step(step) << "\n";
  if (with_json) {
    json doc;
    doc["format"] = 1;
    doc["answer"] = result.eliminable ? "YES" : "NO";
    doc["algorithm"] = result.algorithm;
    doc["notion"] = to_string(*notion);
    doc["target"] = target_spec;
    if (result.trace) {
      json steps = json::array();
      for (const Step& step : result.trace->steps)
        steps.push_back(step_to_json(step));
      doc["trace"] = std::move(steps);
    }
    std::cout << doc.dump(2) << "\n";
  }
  return 0;
}

int cmd_gadget(const std::string& kind, const std::string& input,
               const std::string& output, const std::string& policy_name,
               int fixed_value) {
  std::string text = read_file(input);
  if (kind == "binarize-response" || kind == "binarize-benchmark") {
    Game g = parse_game(text);
    Game out(1, 1);
    if (kind == "binarize-response") {
      out = binarize_best_response(g);
    } else {
      BenchmarkPolicy policy = BenchmarkPolicy::kGlobalMedian;
      if (policy_name == "per-player-median")
        policy = BenchmarkPolicy::kPerPlayerMedian;
      else if (policy_name == "fixed")
        policy = BenchmarkPolicy::kFixed;
      else if (policy_name != "global-median")
        throw PreconditionError("unknown policy '" + policy_name + "'");
      out = binarize_benchmark(g, policy, fixed_value);
    }
    write_file(output, serialize_game(out));
    return 0;
  }

  GadgetOutput gadget;
  if (kind == "cyclereach-2strict" || kind == "cyclereach-3zstrict") {
    GraphFile parsed = parse_graph(text);
    if (!parsed.source)
      throw PreconditionError(
          "cycle-reachability gadgets need a 'source' line in the graph file");
    CycleReachInstance inst{parsed.graph, *parsed.source};
    gadget = kind == "cyclereach-2strict" ? gadget_cyclereach_to_2strict(inst)
                                          : gadget_cyclereach_to_3zstrict(inst);
  } else if (kind == "mcv1-3z") {
    gadget = gadget_mcv1_to_3z(parse_circuit(text));
  } else if (kind == "mcv1-3strict") {
    gadget = gadget_mcv1_to_3strict(parse_circuit(text));
  } else if (kind == "mcv1-4zstrict") {
    gadget = gadget_mcv1_to_4zstrict(parse_circuit(text));
  } else if (kind == "mcv2-2") {
    gadget = gadget_mcv2_to_2(parse_circuit(text));
  } else if (kind == "sat-3weak") {
    gadget = gadget_3sat_to_3weak(parse_dimacs(text));
  } else {
    throw PreconditionError("unknown gadget kind '" + kind + "'");
  }
  write_file(output, serialize_gadget(gadget));
  std::cout << "target "
            << (gadget.target_role == PlayerRole::kRow ? "r" : "c")
            << gadget.target_index + 1 << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int count,
               int max_size) {
  SuiteOptions options;
  options.seed = seed;
  options.count = count;
  options.max_size = max_size;
  SuiteResult result = run_suite(suite, options);
  for (const std::string& line : result.lines) std::cout << line << "\n";
  std::cout << result.checks - result.failures << "/" << result.checks
            << " checks passed\n";
  return result.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "iterated elimination of dominated strategies: deciders, reduction "
      "gadgets and verification suites"};
  app.require_subcommand(1);

  auto* decide = app.add_subcommand(
      "decide", "decide whether a strategy can be eliminated");
  std::string decide_file, notion_name, target_spec, algo = "auto";
  bool with_trace = false, with_json = false;
  decide->add_option("file", decide_file, "game file")->required();
  decide->add_option("--notion", notion_name,
                     "strict|dominance|weak|simultaneous|nbr")
      ->required();
  decide->add_option("--target", target_spec, "strategy, e.g. r2 or c3")
      ->required();
  decide->add_option(
      "--algo", algo,
      "auto|greedy|exhaustive|z-weak|z-dominance|2z-strict|2strict-graph|"
      "3z-strict-graph|response");
  decide->add_flag("--trace", with_trace, "print the elimination sequence");
  decide->add_flag("--json", with_json, "print a structured document");

  auto* gadget = app.add_subcommand(
      "gadget", "construct a reduction game from a source instance");
  std::string kind, gadget_input, gadget_output, policy = "global-median";
  int fixed_value = 0;
  gadget->add_option("kind", kind,
                     "cyclereach-2strict|cyclereach-3zstrict|mcv1-3z|"
                     "mcv1-3strict|mcv1-4zstrict|mcv2-2|sat-3weak|"
                     "binarize-response|binarize-benchmark")
      ->required();
  gadget->add_option("input", gadget_input, "source instance file")->required();
  gadget->add_option("-o,--output", gadget_output, "output game file")
      ->required();
  gadget->add_option("--policy", policy,
                     "global-median|per-player-median|fixed");
  gadget->add_option("--value", fixed_value, "benchmark for --policy fixed");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::uint64_t seed = 0;
  int count = 500, max_size = 5;
  verify->add_option("--suite", suite,
                     "deciders|gadgets|invariants|order-dependence")
      ->required();
  verify->add_option("--seed", seed, "random seed (default 0)");
  verify->add_option("--count", count, "cases per check (default 500)");
  verify->add_option("--max-size", max_size, "size bound (default 5)");

  try {
    app.parse(argc, argv);
    if (decide->parsed())
      return cmd_decide(decide_file, notion_name, target_spec, algo,
                        with_trace, with_json);
    if (gadget->parsed())
      return cmd_gadget(kind, gadget_input, gadget_output, policy, fixed_value);
    if (verify->parsed()) return cmd_verify(suite, seed, count, max_size);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

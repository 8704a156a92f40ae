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

#include <benchmark/benchmark.h>

#include <random>

#include "domelim/circuits.hpp"
#include "domelim/deciders.hpp"
#include "domelim/gadgets.hpp"
#include "domelim/graphs.hpp"
#include "domelim/sampling.hpp"

namespace {

using namespace domelim;

Game dense_random_game(int side, std::uint64_t seed, int max_value) {
  std::mt19937_64 rng(seed);
  Game g(side, side);
  std::uniform_int_distribution<int> value(0, max_value);
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) {
      g.set_a(i, j, value(rng));
      g.set_b(i, j, value(rng));
    }
  return g;
}

void BM_GreedyStrictReduce(benchmark::State& state) {
  Game g = dense_random_game(static_cast<int>(state.range(0)), 7, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(greedy_reduce(g, Notion::kStrict));
}
BENCHMARK(BM_GreedyStrictReduce)->Arg(8)->Arg(32)->Arg(128);

void BM_BinarizeThenReduce200(benchmark::State& state) {
  Game g = dense_random_game(200, 11, 1000);
  for (auto _ : state) {
    Game binary = binarize_benchmark(g);
    benchmark::DoNotOptimize(greedy_reduce(binary, Notion::kStrict));
  }
}
BENCHMARK(BM_BinarizeThenReduce200);

void BM_ExhaustiveWeak(benchmark::State& state) {
  Game g = dense_random_game(static_cast<int>(state.range(0)), 13, 2);
  Target target{PlayerRole::kRow, 0};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        exhaustive_decide(g, target, Notion::kWeak));
}
BENCHMARK(BM_ExhaustiveWeak)->Arg(4)->Arg(6);

void BM_TwoStrictGraphDecide(benchmark::State& state) {
  std::mt19937_64 rng(17);
  Digraph graph = random_digraph(rng, static_cast<int>(state.range(0)), 0.2,
                                 true);
  GadgetOutput gadget = gadget_cyclereach_to_2strict({graph, 0});
  Target target{gadget.target_role, gadget.target_index};
  for (auto _ : state)
    benchmark::DoNotOptimize(two_strict_graph_decide(gadget.game, target));
}
BENCHMARK(BM_TwoStrictGraphDecide)->Arg(16)->Arg(64);

void BM_CycleReach(benchmark::State& state) {
  std::mt19937_64 rng(19);
  Digraph graph = random_digraph(rng, static_cast<int>(state.range(0)), 0.05,
                                 true);
  for (auto _ : state) benchmark::DoNotOptimize(cycle_reach(graph, 0));
}
BENCHMARK(BM_CycleReach)->Arg(64)->Arg(512);

void BM_Mcv1GadgetBuild(benchmark::State& state) {
  MonotoneCircuit circuit =
      random_mcv(McvFlavor::kMcv1, static_cast<int>(state.range(0)), 23);
  for (auto _ : state)
    benchmark::DoNotOptimize(gadget_mcv1_to_3z(circuit));
}
BENCHMARK(BM_Mcv1GadgetBuild)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();

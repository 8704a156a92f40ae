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

#ifndef DOMELIM_SAMPLING_HPP_
#define DOMELIM_SAMPLING_HPP_

#include <random>

#include "domelim/cnf.hpp"
#include "domelim/game.hpp"
#include "domelim/graphs.hpp"

namespace domelim {

// Seeded instance generators shared by the verification suites, the
// acceptance run and the benchmarks. All draw sizes uniformly from
// 1..max_*, so degenerate one-strategy games stay in the mix.

Game random_game(std::mt19937_64& rng, int max_rows, int max_cols,
                 int min_value, int max_value);

// a in [0..c], b = c - a.
Game random_constant_sum_game(std::mt19937_64& rng, int max_rows, int max_cols,
                              int c);

// Both matrices draw from one random pair of distinct values.
Game random_two_value_game(std::mt19937_64& rng, int max_rows, int max_cols);

// a from {mid-d, mid, mid+d}, b = 2*mid - a: a conforming instance for the
// three-value constant-sum strict decider.
Game random_three_value_constant_sum_game(std::mt19937_64& rng, int max_rows,
                                          int max_cols);

Digraph random_digraph(std::mt19937_64& rng, int max_vertices,
                       double edge_probability, bool allow_self_loops);

// `clause_count` distinct (hence subset-free) three-literal clauses.
Cnf3 random_cnf3(std::mt19937_64& rng, int variable_count, int clause_count);

}  // namespace domelim

#endif  // DOMELIM_SAMPLING_HPP_

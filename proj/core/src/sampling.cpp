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

#include "domelim/sampling.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace domelim {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

Game random_game(std::mt19937_64& rng, int max_rows, int max_cols,
                 int min_value, int max_value) {
  int n = uniform(rng, 1, max_rows);
  int m = uniform(rng, 1, max_cols);
  Game g(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      g.set_a(i, j, uniform(rng, min_value, max_value));
      g.set_b(i, j, uniform(rng, min_value, max_value));
    }
  return g;
}

Game random_constant_sum_game(std::mt19937_64& rng, int max_rows, int max_cols,
                              int c) {
  int n = uniform(rng, 1, max_rows);
  int m = uniform(rng, 1, max_cols);
  Game g(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      int a = uniform(rng, 0, c);
      g.set_a(i, j, a);
      g.set_b(i, j, c - a);
    }
  return g;
}

Game random_two_value_game(std::mt19937_64& rng, int max_rows, int max_cols) {
  int lo = uniform(rng, -9, 9);
  int hi = lo + uniform(rng, 1, 7);
  int n = uniform(rng, 1, max_rows);
  int m = uniform(rng, 1, max_cols);
  Game g(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      g.set_a(i, j, uniform(rng, 0, 1) ? hi : lo);
      g.set_b(i, j, uniform(rng, 0, 1) ? hi : lo);
    }
  return g;
}

Game random_three_value_constant_sum_game(std::mt19937_64& rng, int max_rows,
                                          int max_cols) {
  int mid = uniform(rng, -5, 5);
  int d = uniform(rng, 1, 5);
  int n = uniform(rng, 1, max_rows);
  int m = uniform(rng, 1, max_cols);
  Game g(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      int a = mid + d * (uniform(rng, 0, 2) - 1);
      g.set_a(i, j, a);
      g.set_b(i, j, 2 * mid - a);
    }
  return g;
}

Digraph random_digraph(std::mt19937_64& rng, int max_vertices,
                       double edge_probability, bool allow_self_loops) {
  int n = uniform(rng, 1, max_vertices);
  Digraph g(n);
  std::bernoulli_distribution edge(edge_probability);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v && !allow_self_loops) continue;
      if (edge(rng)) g.add_edge(u, v);
    }
  return g;
}

Cnf3 random_cnf3(std::mt19937_64& rng, int variable_count, int clause_count) {
  if (variable_count < 2)
    throw std::invalid_argument("random_cnf3 needs at least two variables");
  Cnf3 f;
  f.variable_count = variable_count;
  std::set<std::set<Literal>> used;
  int guard = 0;
  while (static_cast<int>(f.clauses.size()) < clause_count) {
    if (++guard > 100000)
      throw std::invalid_argument("random_cnf3: clause count infeasible");
    std::set<Literal> literals;
    while (literals.size() < 3)
      literals.insert(Literal{uniform(rng, 0, variable_count - 1),
                              uniform(rng, 0, 1) == 1});
    if (!used.insert(literals).second) continue;
    std::array<Literal, 3> clause;
    std::copy(literals.begin(), literals.end(), clause.begin());
    f.clauses.push_back(clause);
  }
  return f;
}

}  // namespace domelim

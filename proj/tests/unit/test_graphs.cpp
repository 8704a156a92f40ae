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

#include "domelim/graphs.hpp"

#include <random>

#include "doctest.h"
#include "domelim/error.hpp"
#include "domelim/sampling.hpp"

using namespace domelim;

namespace {

// Reference: a cycle is reachable from s iff some vertex reachable from s
// can walk back to itself in at least one step.
bool cycle_reach_reference(const Digraph& g, int s) {
  int n = g.vertex_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int v = 0; v < n; ++v) {
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.successors(u))
        if (!reach[v][w]) {
          reach[v][w] = true;
          stack.push_back(w);
        }
    }
  }
  for (int v = 0; v < n; ++v)
    if ((v == s || reach[s][v]) && reach[v][v]) return true;
  return false;
}

}  // namespace

TEST_CASE("cycle_reach basics") {
  Digraph loop(1);
  loop.add_edge(0, 0);
  CHECK(cycle_reach(loop, 0));

  Digraph chain(3);
  chain.add_edge(0, 1);
  chain.add_edge(1, 2);
  CHECK_FALSE(cycle_reach(chain, 0));

  Digraph back(3);
  back.add_edge(0, 1);
  back.add_edge(1, 2);
  back.add_edge(2, 1);
  CHECK(cycle_reach(back, 0));
  CHECK_FALSE(cycle_reach(Digraph(2), 1));
}

TEST_CASE("cycle_reach agrees with the walk-back reference") {
  // Full enumeration of all digraphs on 3 vertices (9 possible edges).
  for (int mask = 0; mask < (1 << 9); ++mask) {
    Digraph g(3);
    for (int e = 0; e < 9; ++e)
      if ((mask >> e) & 1) g.add_edge(e / 3, e % 3);
    for (int s = 0; s < 3; ++s)
      CHECK(cycle_reach(g, s) == cycle_reach_reference(g, s));
  }
  std::mt19937_64 rng(71);
  for (int n = 0; n < 300; ++n) {
    Digraph g = random_digraph(rng, 8, 0.25, true);
    for (int s = 0; s < g.vertex_count(); ++s)
      CHECK(cycle_reach(g, s) == cycle_reach_reference(g, s));
  }
}

TEST_CASE("reach_to_cyclereach") {
  Digraph chain(3);
  chain.add_edge(0, 1);
  chain.add_edge(1, 2);
  CHECK(cycle_reach(reach_to_cyclereach(chain, 0, 2)));

  Digraph isolated(2);
  CHECK_FALSE(cycle_reach(reach_to_cyclereach(isolated, 0, 1)));

  // s = t: the zero-length path becomes a self-loop.
  CHECK(cycle_reach(reach_to_cyclereach(isolated, 0, 0)));

  Digraph cyclic(2);
  cyclic.add_edge(0, 1);
  cyclic.add_edge(1, 0);
  CHECK_THROWS_AS(reach_to_cyclereach(cyclic, 0, 1), PreconditionError);

  SUBCASE("answer equals plain reachability on random dags") {
    std::mt19937_64 rng(73);
    for (int n = 0; n < 200; ++n) {
      // Edges only forward: always acyclic.
      int size = std::uniform_int_distribution<int>(2, 8)(rng);
      Digraph g(size);
      for (int u = 0; u < size; ++u)
        for (int v = u + 1; v < size; ++v)
          if (std::bernoulli_distribution(0.3)(rng)) g.add_edge(u, v);
      int s = 0, t = size - 1;
      std::vector<bool> seen(size, false);
      std::vector<int> stack{s};
      seen[s] = true;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.successors(u))
          if (!seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
      }
      CHECK(cycle_reach(reach_to_cyclereach(g, s, t)) == seen[t]);
    }
  }
}

TEST_CASE("subdivide_bipartite") {
  SUBCASE("a 2-cycle becomes a 4-cycle") {
    Digraph g(2);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    BipartiteSubdivision sub = subdivide_bipartite(g);
    CHECK(sub.graph.vertex_count() == 4);
    CHECK(sub.graph.edge_count() == 4);
    CHECK(cycle_reach(sub.graph, 0));
  }
  SUBCASE("an edgeless graph is unchanged") {
    BipartiteSubdivision sub = subdivide_bipartite(Digraph(3));
    CHECK(sub.graph.vertex_count() == 3);
    CHECK(sub.graph.edge_count() == 0);
    CHECK(sub.left == std::vector<bool>{true, true, true});
  }
  SUBCASE("self-loops become 4-cycles and 2-cycles never appear") {
    Digraph g(1);
    g.add_edge(0, 0);
    BipartiteSubdivision sub = subdivide_bipartite(g);
    CHECK(sub.graph.vertex_count() == 4);
    CHECK(cycle_reach(sub.graph, 0));
    for (auto [u, v] : sub.graph.edges()) CHECK_FALSE(sub.graph.has_edge(v, u));
  }
  SUBCASE("edges cross the partition and reachability is preserved") {
    std::mt19937_64 rng(79);
    for (int n = 0; n < 150; ++n) {
      Digraph g = random_digraph(rng, 10, 0.3, true);
      BipartiteSubdivision sub = subdivide_bipartite(g);
      for (auto [u, v] : sub.graph.edges()) {
        CHECK(sub.left[u] != sub.left[v]);
        CHECK_FALSE(sub.graph.has_edge(v, u));
      }
      for (int s = 0; s < g.vertex_count(); ++s)
        CHECK(cycle_reach(sub.graph, s) == cycle_reach(g, s));
    }
  }
}

TEST_CASE("peel_to_cycles removes exactly the cycle-free part") {
  std::mt19937_64 rng(83);
  for (int n = 0; n < 200; ++n) {
    Digraph g = random_digraph(rng, 9, 0.25, true);
    std::vector<bool> peeled(g.vertex_count(), false);
    for (int v : peel_to_cycles(g)) peeled[v] = true;
    for (int v = 0; v < g.vertex_count(); ++v)
      CHECK(peeled[v] == !cycle_reach(g, v));
  }
}

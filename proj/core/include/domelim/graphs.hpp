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

#ifndef DOMELIM_GRAPHS_HPP_
#define DOMELIM_GRAPHS_HPP_

#include <utility>
#include <vector>

namespace domelim {

// Directed graph on vertices 0..n-1. Parallel edges are collapsed;
// self-loops are allowed.
class Digraph {
 public:
  explicit Digraph(int vertex_count);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  void add_edge(int from, int to);
  bool has_edge(int from, int to) const;
  const std::vector<int>& successors(int v) const { return adjacency_[v]; }
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;
  bool is_acyclic() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::vector<std::vector<int>> adjacency_;  // each list sorted ascending
};

struct CycleReachInstance {
  Digraph graph;
  int source = 0;
};

// True iff some directed cycle (self-loops included) is reachable from
// inst.source.
bool cycle_reach(const CycleReachInstance& inst);
bool cycle_reach(const Digraph& g, int source);

// Adds the edge t -> s to an acyclic graph; a cycle is then reachable from s
// iff t was reachable from s. Rejects cyclic inputs.
CycleReachInstance reach_to_cyclereach(const Digraph& g, int s, int t);

struct BipartiteSubdivision {
  Digraph graph;
  // Side of every vertex: true = left part. Original vertices are always on
  // the left and keep their ids.
  std::vector<bool> left;
};

// Inserts a fresh vertex on every edge (three on a self-loop, keeping the
// result bipartite). The output has no 2-cycles, and cycle reachability from
// every original vertex is preserved.
BipartiteSubdivision subdivide_bipartite(const Digraph& g);

// Vertices from which no cycle is reachable, in the order they become
// sinks when vertices without successors are removed repeatedly.
std::vector<int> peel_to_cycles(const Digraph& g);

}  // namespace domelim

#endif  // DOMELIM_GRAPHS_HPP_

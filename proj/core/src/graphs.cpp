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

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "domelim/error.hpp"

namespace domelim {

Digraph::Digraph(int vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  adjacency_.resize(vertex_count);
}

void Digraph::add_edge(int from, int to) {
  if (from < 0 || from >= vertex_count() || to < 0 || to >= vertex_count())
    throw std::out_of_range("edge endpoint out of range");
  auto& succ = adjacency_[from];
  auto it = std::lower_bound(succ.begin(), succ.end(), to);
  if (it == succ.end() || *it != to) succ.insert(it, to);
}

bool Digraph::has_edge(int from, int to) const {
  const auto& succ = adjacency_[from];
  return std::binary_search(succ.begin(), succ.end(), to);
}

std::vector<std::pair<int, int>> Digraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adjacency_[u]) out.emplace_back(u, v);
  return out;
}

int Digraph::edge_count() const {
  int n = 0;
  for (const auto& succ : adjacency_) n += static_cast<int>(succ.size());
  return n;
}

namespace {

enum class Color { kWhite, kGray, kBlack };

// Iterative DFS; returns true if a back edge is reachable from `start`.
bool dfs_finds_cycle(const Digraph& g, int start, std::vector<Color>& color) {
  struct Frame {
    int vertex;
    std::size_t next;
  };
  std::vector<Frame> stack;
  if (color[start] != Color::kWhite) return false;
  color[start] = Color::kGray;
  stack.push_back({start, 0});
  while (!stack.empty()) {
    Frame& frame = stack.back();
    const auto& succ = g.successors(frame.vertex);
    if (frame.next < succ.size()) {
      int next = succ[frame.next++];
      if (color[next] == Color::kGray) return true;
      if (color[next] == Color::kWhite) {
        color[next] = Color::kGray;
        stack.push_back({next, 0});
      }
    } else {
      color[frame.vertex] = Color::kBlack;
      stack.pop_back();
    }
  }
  return false;
}

}  // namespace

bool Digraph::is_acyclic() const {
  std::vector<Color> color(vertex_count(), Color::kWhite);
  for (int v = 0; v < vertex_count(); ++v)
    if (dfs_finds_cycle(*this, v, color)) return false;
  return true;
}

bool cycle_reach(const Digraph& g, int source) {
  if (source < 0 || source >= g.vertex_count())
    throw std::out_of_range("source out of range");
  std::vector<Color> color(g.vertex_count(), Color::kWhite);
  return dfs_finds_cycle(g, source, color);
}

bool cycle_reach(const CycleReachInstance& inst) {
  return cycle_reach(inst.graph, inst.source);
}

CycleReachInstance reach_to_cyclereach(const Digraph& g, int s, int t) {
  if (!g.is_acyclic())
    throw PreconditionError("reach_to_cyclereach expects an acyclic graph");
  if (s < 0 || s >= g.vertex_count() || t < 0 || t >= g.vertex_count())
    throw std::out_of_range("vertex out of range");
  Digraph out = g;
  out.add_edge(t, s);
  return CycleReachInstance{std::move(out), s};
}

BipartiteSubdivision subdivide_bipartite(const Digraph& g) {
  int n = g.vertex_count();
  int extra = 0;
  for (auto [u, v] : g.edges()) extra += u == v ? 3 : 1;
  Digraph out(n + extra);
  std::vector<bool> left(n + extra, false);
  for (int v = 0; v < n; ++v) left[v] = true;
  int next = n;
  for (auto [u, v] : g.edges()) {
    if (u != v) {
      int x = next++;
      out.add_edge(u, x);
      out.add_edge(x, v);
    } else {
      // A single inserted vertex would turn the loop into a 2-cycle, so a
      // self-loop becomes a 4-cycle through three fresh vertices.
      int x = next++, y = next++, z = next++;
      left[y] = true;
      out.add_edge(u, x);
      out.add_edge(x, y);
      out.add_edge(y, z);
      out.add_edge(z, u);
    }
  }
  return BipartiteSubdivision{std::move(out), std::move(left)};
}

std::vector<int> peel_to_cycles(const Digraph& g) {
  int n = g.vertex_count();
  std::vector<int> out_degree(n, 0);
  std::vector<std::vector<int>> predecessors(n);
  for (auto [u, v] : g.edges()) {
    ++out_degree[u];
    predecessors[v].push_back(u);
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> sinks;
  for (int v = 0; v < n; ++v)
    if (out_degree[v] == 0) sinks.push(v);
  std::vector<int> order;
  while (!sinks.empty()) {
    int v = sinks.top();
    sinks.pop();
    order.push_back(v);
    for (int u : predecessors[v])
      if (--out_degree[u] == 0) sinks.push(u);
  }
  return order;
}

}  // namespace domelim

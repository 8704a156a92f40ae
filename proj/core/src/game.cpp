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

#include "domelim/game.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace domelim {

std::string to_string(PlayerRole role) {
  return role == PlayerRole::kRow ? "row" : "col";
}

StrategySet::StrategySet(int universe, bool full)
    : universe_(universe), count_(full ? universe : 0),
      words_((universe + 63) / 64 + (universe == 0 ? 1 : 0), 0) {
  if (universe < 0) throw std::invalid_argument("negative universe");
  if (full) {
    for (int i = 0; i < universe; ++i)
      words_[static_cast<unsigned>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  }
}

void StrategySet::add(int i) {
  if (i < 0 || i >= universe_) throw std::out_of_range("StrategySet::add");
  if (!contains(i)) {
    words_[static_cast<unsigned>(i) >> 6] |= std::uint64_t{1} << (i & 63);
    ++count_;
  }
}

void StrategySet::remove(int i) {
  if (i < 0 || i >= universe_) throw std::out_of_range("StrategySet::remove");
  if (contains(i)) {
    words_[static_cast<unsigned>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
    --count_;
  }
}

std::vector<int> StrategySet::members() const {
  std::vector<int> out;
  out.reserve(count_);
  for (int i = 0; i < universe_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::uint64_t StrategySet::packed() const {
  if (universe_ > 64) throw std::out_of_range("StrategySet::packed: universe > 64");
  return words_.empty() ? 0 : words_[0];
}

StrategySet StrategySet::intersect(const StrategySet& other) const {
  if (universe_ != other.universe_)
    throw std::invalid_argument("StrategySet::intersect: universe mismatch");
  StrategySet out(universe_, false);
  for (std::size_t w = 0; w < words_.size(); ++w)
    out.words_[w] = words_[w] & other.words_[w];
  out.count_ = 0;
  for (std::uint64_t word : out.words_) out.count_ += std::popcount(word);
  return out;
}

Game::Game(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("game needs at least one row and one column");
  a_.assign(static_cast<std::size_t>(rows) * cols, 0);
  b_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

Game::Game(std::vector<std::vector<int>> a, std::vector<std::vector<int>> b)
    : Game(static_cast<int>(a.size()),
           a.empty() ? 0 : static_cast<int>(a[0].size())) {
  if (a.size() != b.size())
    throw std::invalid_argument("payoff matrices differ in row count");
  for (int i = 0; i < rows_; ++i) {
    if (static_cast<int>(a[i].size()) != cols_ ||
        static_cast<int>(b[i].size()) != cols_)
      throw std::invalid_argument("payoff matrices are ragged");
    for (int j = 0; j < cols_; ++j) {
      set_a(i, j, a[i][j]);
      set_b(i, j, b[i][j]);
    }
  }
}

SubgameView::SubgameView(const Game& game, const Subgame& sub)
    : game_(&game), sub_(sub) {
  if (!sub.consistent_with(game))
    throw std::invalid_argument("subgame inconsistent with game");
  row_ids_ = sub.rows.members();
  col_ids_ = sub.cols.members();
}

SubgameView SubgameView::restricted(const Subgame& sub) const {
  Subgame both{sub_.rows.intersect(sub.rows), sub_.cols.intersect(sub.cols)};
  return SubgameView(*game_, both);
}

SubgameView restrict(const Game& g, const Subgame& s) {
  return SubgameView(g, s);
}

int payoff_value_count(const Game& g) {
  std::unordered_set<int> values;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) {
      values.insert(g.a(i, j));
      values.insert(g.b(i, j));
    }
  return static_cast<int>(values.size());
}

std::optional<int> constant_sum_of(const Game& g) {
  long long c = static_cast<long long>(g.a(0, 0)) + g.b(0, 0);
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j)
      if (static_cast<long long>(g.a(i, j)) + g.b(i, j) != c)
        return std::nullopt;
  return static_cast<int>(c);
}

bool jointly_varying(const Game& g) {
  // a-value determines b-value and vice versa: both maps functional.
  std::unordered_map<int, int> a_to_b;
  std::unordered_map<int, int> b_to_a;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) {
      int av = g.a(i, j), bv = g.b(i, j);
      auto [ia, inserted_a] = a_to_b.emplace(av, bv);
      if (!inserted_a && ia->second != bv) return false;
      auto [ib, inserted_b] = b_to_a.emplace(bv, av);
      if (!inserted_b && ib->second != av) return false;
    }
  return true;
}

Game transpose_roles(const Game& g) {
  Game out(g.cols(), g.rows());
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) {
      out.set_a(j, i, g.b(i, j));
      out.set_b(j, i, g.a(i, j));
    }
  return out;
}

std::vector<std::pair<int, int>> pure_nash(const Game& g, const Subgame& s) {
  if (!s.consistent_with(g))
    throw std::invalid_argument("subgame inconsistent with game");
  std::vector<int> rows = s.rows.members();
  std::vector<int> cols = s.cols.members();
  std::vector<std::pair<int, int>> out;
  for (int i : rows) {
    for (int j : cols) {
      bool best_row = true;
      for (int k : rows)
        if (g.a(k, j) > g.a(i, j)) { best_row = false; break; }
      if (!best_row) continue;
      bool best_col = true;
      for (int l : cols)
        if (g.b(i, l) > g.b(i, j)) { best_col = false; break; }
      if (best_col) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace domelim

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

#ifndef DOMELIM_GAME_HPP_
#define DOMELIM_GAME_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace domelim {

enum class PlayerRole { kRow, kColumn };

inline PlayerRole opponent(PlayerRole role) {
  return role == PlayerRole::kRow ? PlayerRole::kColumn : PlayerRole::kRow;
}

std::string to_string(PlayerRole role);

// A subset of {0..universe-1}, stored as a bit vector. Strategy sets always
// refer to the original index space of a game, so traces keep the original
// numbering no matter how many strategies have been removed.
class StrategySet {
 public:
  StrategySet() = default;
  explicit StrategySet(int universe, bool full = true);

  int universe() const { return universe_; }
  int count() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(int i) const {
    return (words_[static_cast<unsigned>(i) >> 6] >> (i & 63)) & 1u;
  }
  void add(int i);
  void remove(int i);

  std::vector<int> members() const;
  // Bits 0..universe-1 packed into one word; requires universe <= 64.
  std::uint64_t packed() const;

  StrategySet intersect(const StrategySet& other) const;

  friend bool operator==(const StrategySet&, const StrategySet&) = default;

 private:
  int universe_ = 0;
  int count_ = 0;
  std::vector<std::uint64_t> words_;
};

// Two-player normal-form game with exact integer payoffs. `a` is the row
// player's payoff matrix, `b` the column player's; both are `rows x cols`.
class Game {
 public:
  Game(int rows, int cols);
  Game(std::vector<std::vector<int>> a, std::vector<std::vector<int>> b);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int a(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  int b(int i, int j) const { return b_[static_cast<std::size_t>(i) * cols_ + j]; }
  void set_a(int i, int j, int v) { a_[static_cast<std::size_t>(i) * cols_ + j] = v; }
  void set_b(int i, int j, int v) { b_[static_cast<std::size_t>(i) * cols_ + j] = v; }

  // Payoff of `role` when row i meets column j.
  int payoff(PlayerRole role, int i, int j) const {
    return role == PlayerRole::kRow ? a(i, j) : b(i, j);
  }

  friend bool operator==(const Game&, const Game&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> a_;
  std::vector<int> b_;
};

// Nonempty row and column subsets of a game.
struct Subgame {
  StrategySet rows;
  StrategySet cols;

  static Subgame full(const Game& g) {
    return Subgame{StrategySet(g.rows()), StrategySet(g.cols())};
  }

  const StrategySet& side(PlayerRole role) const {
    return role == PlayerRole::kRow ? rows : cols;
  }
  StrategySet& side(PlayerRole role) {
    return role == PlayerRole::kRow ? rows : cols;
  }
  bool contains(PlayerRole role, int index) const {
    return side(role).contains(index);
  }
  bool consistent_with(const Game& g) const {
    return rows.universe() == g.rows() && cols.universe() == g.cols() &&
           !rows.empty() && !cols.empty();
  }

  friend bool operator==(const Subgame&, const Subgame&) = default;
};

// Read access to the payoff matrices restricted to a subgame, with the
// mapping back to original indices.
class SubgameView {
 public:
  SubgameView(const Game& game, const Subgame& sub);

  int rows() const { return static_cast<int>(row_ids_.size()); }
  int cols() const { return static_cast<int>(col_ids_.size()); }
  int a(int vi, int vj) const { return game_->a(row_ids_[vi], col_ids_[vj]); }
  int b(int vi, int vj) const { return game_->b(row_ids_[vi], col_ids_[vj]); }
  int original_row(int vi) const { return row_ids_[vi]; }
  int original_col(int vj) const { return col_ids_[vj]; }
  const Subgame& subgame() const { return sub_; }

  // Further restriction; `sub` is again in original indices.
  SubgameView restricted(const Subgame& sub) const;

 private:
  const Game* game_;
  Subgame sub_;
  std::vector<int> row_ids_;
  std::vector<int> col_ids_;
};

SubgameView restrict(const Game& g, const Subgame& s);

// Number of distinct payoff values across both matrices (the game's k).
int payoff_value_count(const Game& g);

// The constant c with a(i,j) + b(i,j) = c everywhere, if one exists.
std::optional<int> constant_sum_of(const Game& g);

// True iff a(i,j) = a(k,l) <=> b(i,j) = b(k,l) for all cell pairs.
bool jointly_varying(const Game& g);

// Swaps the players: the result is a cols x rows game with a' = b^T, b' = a^T.
// Involution; lets row-target algorithms answer column-target questions.
Game transpose_roles(const Game& g);

// All pure Nash equilibria (i, j) of the subgame, in original indices,
// ordered row-major.
std::vector<std::pair<int, int>> pure_nash(const Game& g, const Subgame& s);

}  // namespace domelim

#endif  // DOMELIM_GAME_HPP_

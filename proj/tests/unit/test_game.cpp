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

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "domelim/deciders.hpp"
#include "domelim/sampling.hpp"
#include "oracle.hpp"

using namespace domelim;

TEST_CASE("payoff value count") {
  CHECK(payoff_value_count(Game({{0, 1}}, {{2, 3}})) == 4);
  CHECK(payoff_value_count(Game({{1, 1}, {1, 1}}, {{1, 1}, {1, 1}})) == 1);
  // Bounds: 1 <= k <= 2*n*m.
  std::mt19937_64 rng(7);
  for (int n = 0; n < 50; ++n) {
    Game g = random_game(rng, 4, 4, -5, 5);
    int k = payoff_value_count(g);
    CHECK(k >= 1);
    CHECK(k <= 2 * g.rows() * g.cols());
  }
}

TEST_CASE("constant sum detection") {
  CHECK(constant_sum_of(Game({{1, 0}}, {{1, 2}})) == 2);
  CHECK(!constant_sum_of(Game({{1, 0}}, {{0, 0}})).has_value());
  CHECK(constant_sum_of(Game({{0}}, {{0}})) == 0);
}

TEST_CASE("jointly varying payoffs") {
  CHECK_FALSE(jointly_varying(Game({{0, 1}}, {{0, 0}})));
  CHECK_FALSE(jointly_varying(Game({{0, 0}}, {{0, 1}})));
  std::mt19937_64 rng(11);
  for (int n = 0; n < 50; ++n) {
    Game g = random_constant_sum_game(rng, 4, 4, 5);
    CHECK(jointly_varying(g));  // x -> c - x is injective
  }
}

TEST_CASE("restriction views") {
  Game g({{1, 2}, {3, 4}}, {{5, 6}, {7, 8}});
  SUBCASE("full restriction is the identity") {
    SubgameView view = restrict(g, Subgame::full(g));
    CHECK(view.rows() == 2);
    CHECK(view.cols() == 2);
    CHECK(view.a(1, 0) == 3);
    CHECK(view.b(0, 1) == 6);
  }
  SUBCASE("single cell keeps original indices") {
    Subgame s = Subgame::full(g);
    s.rows.remove(0);
    s.cols.remove(1);
    SubgameView view = restrict(g, s);
    CHECK(view.rows() == 1);
    CHECK(view.cols() == 1);
    CHECK(view.a(0, 0) == 3);
    CHECK(view.b(0, 0) == 7);
    CHECK(view.original_row(0) == 1);
    CHECK(view.original_col(0) == 0);
  }
  SUBCASE("composed restrictions intersect") {
    Subgame s1 = Subgame::full(g);
    s1.rows.remove(0);
    Subgame s2 = Subgame::full(g);
    s2.cols.remove(1);
    SubgameView once = restrict(g, Subgame{s1.rows.intersect(s2.rows),
                                           s1.cols.intersect(s2.cols)});
    SubgameView twice = restrict(g, s1).restricted(s2);
    CHECK(once.subgame() == twice.subgame());
  }
  SUBCASE("inconsistent subgame rejected") {
    CHECK_THROWS_AS(restrict(g, Subgame{StrategySet(3), StrategySet(2)}),
                    std::invalid_argument);
  }
}

TEST_CASE("pure nash enumeration") {
  Game pennies({{1, 0}, {0, 1}}, {{0, 1}, {1, 0}});
  CHECK(pure_nash(pennies, Subgame::full(pennies)).empty());

  Game trivial({{1}}, {{1}});
  CHECK(pure_nash(trivial, Subgame::full(trivial)) ==
        std::vector<std::pair<int, int>>{{0, 0}});

  Game g({{3, 0}, {5, 1}}, {{3, 5}, {0, 1}});
  CHECK(pure_nash(g, Subgame::full(g)) ==
        std::vector<std::pair<int, int>>{{1, 1}});
}

TEST_CASE("transpose_roles") {
  Game g({{1, 2}}, {{3, 4}});
  Game t = transpose_roles(g);
  CHECK(t.rows() == 2);
  CHECK(t.cols() == 1);
  CHECK(t.a(0, 0) == 3);
  CHECK(t.a(1, 0) == 4);
  CHECK(t.b(0, 0) == 1);
  CHECK(t.b(1, 0) == 2);
  CHECK(transpose_roles(t) == g);

  // Column questions reduce to row questions on the transposed game.
  std::mt19937_64 rng(3);
  for (int n = 0; n < 40; ++n) {
    Game h = random_game(rng, 3, 3, 0, 2);
    Game ht = transpose_roles(h);
    for (int j = 0; j < h.cols(); ++j) {
      bool direct = oracle::eliminable(h, PlayerRole::kColumn, j,
                                       Notion::kStrict);
      bool via_transpose =
          oracle::eliminable(ht, PlayerRole::kRow, j, Notion::kStrict);
      CHECK(direct == via_transpose);
      CHECK(exhaustive_decide(h, {PlayerRole::kColumn, j}, Notion::kStrict)
                .eliminable == direct);
    }
  }
}

TEST_CASE("strategy sets") {
  StrategySet s(70);
  CHECK(s.count() == 70);
  s.remove(69);
  s.remove(0);
  CHECK(s.count() == 68);
  CHECK_FALSE(s.contains(69));
  CHECK(s.contains(33));
  CHECK_THROWS_AS(s.packed(), std::out_of_range);
  StrategySet small(5);
  small.remove(2);
  CHECK(small.packed() == 0b11011);
}

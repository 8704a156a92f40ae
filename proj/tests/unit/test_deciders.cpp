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

#include "domelim/deciders.hpp"

#include <random>

#include "doctest.h"
#include "domelim/error.hpp"
#include "domelim/sampling.hpp"
#include "oracle.hpp"

using namespace domelim;

namespace {

const Target kRow0{PlayerRole::kRow, 0};
const Target kRow1{PlayerRole::kRow, 1};

bool check_yes_trace(const Game& g, const DecisionResult& result,
                     Target target) {
  if (!result.eliminable) return true;
  REQUIRE(result.trace.has_value());
  return validate_trace(g, *result.trace) &&
         !result.trace->final.contains(target.role, target.index);
}

}  // namespace

TEST_CASE("greedy_reduce reaches the known strict fixed point") {
  Game g({{2, 2}, {1, 1}}, {{0, 1}, {0, 1}});
  auto [reduced, trace] = greedy_reduce(g, Notion::kStrict);
  CHECK(reduced.rows.members() == std::vector<int>{0});
  CHECK(reduced.cols.members() == std::vector<int>{1});
  CHECK(validate_trace(g, trace));
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    CHECK(greedy_reduce(g, Notion::kStrict, seed).first == reduced);
}

TEST_CASE("greedy_reduce leaves irreducible games alone") {
  Game pennies({{1, 0}, {0, 1}}, {{0, 1}, {1, 0}});
  auto [reduced, trace] =
      greedy_reduce(pennies, Notion::kNeverBestResponse);
  CHECK(reduced == Subgame::full(pennies));
  CHECK(trace.steps.empty());

  Game single({{4}}, {{4}});
  for (Notion notion :
       {Notion::kStrict, Notion::kSimultaneous, Notion::kNeverBestResponse})
    CHECK(greedy_reduce(single, notion).second.steps.empty());

  CHECK_THROWS_AS(greedy_reduce(pennies, Notion::kWeak), PreconditionError);
}

TEST_CASE("greedy_decide on the two-row example") {
  Game g({{2, 2}, {1, 1}}, {{0, 1}, {0, 1}});
  CHECK(greedy_decide(g, kRow1, Notion::kStrict).eliminable);
  CHECK_FALSE(greedy_decide(g, kRow0, Notion::kStrict).eliminable);
  CHECK(check_yes_trace(g, greedy_decide(g, kRow1, Notion::kStrict), kRow1));

  Game pennies({{1, 0}, {0, 1}}, {{0, 1}, {1, 0}});
  CHECK_FALSE(
      greedy_decide(pennies, kRow0, Notion::kNeverBestResponse).eliminable);
}

TEST_CASE("exhaustive_decide distinguishes weak from dominance") {
  Game equal({{1, 1}, {1, 1}}, {{1, 1}, {1, 1}});
  CHECK(exhaustive_decide(equal, kRow0, Notion::kWeak).eliminable);
  CHECK_FALSE(exhaustive_decide(equal, kRow0, Notion::kDominance).eliminable);
}

TEST_CASE("exhaustive_decide on the order-dependent game") {
  Game g({{1, 0}, {1, 2}, {0, 2}}, {{1, 0}, {1, 1}, {0, 1}});
  DecisionResult yes = exhaustive_decide(g, kRow0, Notion::kDominance);
  CHECK(yes.eliminable);
  CHECK(check_yes_trace(g, yes, kRow0));
  CHECK_FALSE(exhaustive_decide(g, kRow1, Notion::kDominance).eliminable);
  CHECK(oracle::eliminable(g, PlayerRole::kRow, 0, Notion::kDominance));
  CHECK_FALSE(oracle::eliminable(g, PlayerRole::kRow, 1, Notion::kDominance));
}

TEST_CASE("exhaustive_decide agrees with the reference search") {
  std::mt19937_64 rng(101);
  for (int n = 0; n < 120; ++n) {
    Game g = random_game(rng, 4, 3, 0, 2);
    for (Notion notion : {Notion::kStrict, Notion::kDominance, Notion::kWeak,
                          Notion::kSimultaneous, Notion::kNeverBestResponse}) {
      for (int i = 0; i < g.rows(); ++i) {
        Target t{PlayerRole::kRow, i};
        DecisionResult mine = exhaustive_decide(g, t, notion);
        CHECK(mine.eliminable ==
              oracle::eliminable(g, PlayerRole::kRow, i, notion));
        CHECK(check_yes_trace(g, mine, t));
      }
    }
  }
}

TEST_CASE("exhaustive_decide budget gates") {
  Game big(20, 20);
  CHECK_THROWS_AS(exhaustive_decide(big, kRow0, Notion::kWeak),
                  BudgetError);
  Game equal({{1, 1}, {1, 1}}, {{1, 1}, {1, 1}});
  SearchBudget tiny;
  tiny.max_states = 1;
  // Row 1 falls on the very first transition, before the cap can bite.
  CHECK(exhaustive_decide(equal, kRow0, Notion::kWeak, tiny).eliminable);
  tiny.max_states = 0;
  CHECK_THROWS_AS(exhaustive_decide(equal, kRow0, Notion::kDominance, tiny),
                  BudgetError);
}

TEST_CASE("exhaustive_decide memoization is deterministic and bounded") {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 30; ++n) {
    Game g = random_game(rng, 4, 4, 0, 2);
    SearchStats first, second;
    exhaustive_decide(g, kRow0, Notion::kWeak, {}, &first);
    exhaustive_decide(g, kRow0, Notion::kWeak, {}, &second);
    CHECK(first.states_visited == second.states_visited);
    CHECK(first.states_visited <=
          (std::size_t{1} << (g.rows() + g.cols())));
  }
}

TEST_CASE("z_weak_decide") {
  Game g({{1, 0}, {1, 1}}, {{0, 1}, {0, 0}});
  REQUIRE(constant_sum_of(g) == 1);
  DecisionResult yes = z_weak_decide(g, 0);
  CHECK(yes.eliminable);
  CHECK(check_yes_trace(g, yes, kRow0));
  CHECK_FALSE(z_weak_decide(g, 1).eliminable);

  Game single({{0}}, {{0}});
  CHECK_FALSE(z_weak_decide(single, 0).eliminable);

  Game skew({{1, 0}}, {{0, 0}});
  CHECK_THROWS_AS(z_weak_decide(skew, 0), PreconditionError);
}

TEST_CASE("z_dominance_decide") {
  Game g({{1, 0}, {1, 1}}, {{0, 1}, {0, 0}});
  DecisionResult yes = z_dominance_decide(g, 0);
  CHECK(yes.eliminable);
  CHECK(check_yes_trace(g, yes, kRow0));

  Game single({{0}}, {{0}});
  CHECK_FALSE(z_dominance_decide(single, 0).eliminable);

  Game constant({{2, 2}, {2, 2}}, {{0, 0}, {0, 0}});
  CHECK_FALSE(z_dominance_decide(constant, 0).eliminable);
  CHECK_FALSE(z_dominance_decide(constant, 1).eliminable);

  Game skew({{1, 0}}, {{0, 0}});
  CHECK_THROWS_AS(z_dominance_decide(skew, 0), PreconditionError);
}

TEST_CASE("z deciders match the exhaustive search on constant-sum games") {
  std::mt19937_64 rng(31);
  for (int n = 0; n < 150; ++n) {
    Game g = random_constant_sum_game(rng, 4, 4, 4);
    for (int i = 0; i < g.rows(); ++i) {
      Target t{PlayerRole::kRow, i};
      CHECK(z_weak_decide(g, i).eliminable ==
            exhaustive_decide(g, t, Notion::kWeak).eliminable);
      CHECK(z_dominance_decide(g, i).eliminable ==
            exhaustive_decide(g, t, Notion::kDominance).eliminable);
    }
  }
}

TEST_CASE("two_z_strict_decide") {
  auto mirrored = [](std::vector<std::vector<int>> a) {
    std::vector<std::vector<int>> b = a;
    for (auto& row : b)
      for (int& v : row) v = 1 - v;
    return Game(a, b);
  };
  Game g = mirrored({{1, 1}, {0, 0}});
  CHECK(two_z_strict_decide(g, kRow1).eliminable);
  CHECK_FALSE(two_z_strict_decide(g, kRow0).eliminable);
  CHECK_FALSE(two_z_strict_decide(g, {PlayerRole::kColumn, 0}).eliminable);
  CHECK(check_yes_trace(g, two_z_strict_decide(g, kRow1), kRow1));

  Game none = mirrored({{1, 0}, {0, 1}});
  for (int i = 0; i < 2; ++i) {
    CHECK_FALSE(two_z_strict_decide(none, {PlayerRole::kRow, i}).eliminable);
    CHECK_FALSE(
        two_z_strict_decide(none, {PlayerRole::kColumn, i}).eliminable);
  }

  Game wide = mirrored({{1, 1}});
  CHECK_FALSE(two_z_strict_decide(wide, kRow0).eliminable);
  CHECK_FALSE(two_z_strict_decide(wide, {PlayerRole::kColumn, 0}).eliminable);
  CHECK_FALSE(two_z_strict_decide(wide, {PlayerRole::kColumn, 1}).eliminable);

  SUBCASE("preconditions each rejected with a distinct error") {
    Game not_constant({{1, 0}}, {{0, 0}});
    CHECK_THROWS_AS(two_z_strict_decide(not_constant, kRow0),
                    PreconditionError);
    Game three({{0, 1}, {2, 0}}, {{2, 1}, {0, 2}});
    CHECK_THROWS_AS(two_z_strict_decide(three, kRow0), PreconditionError);
    Game flat({{3, 3}}, {{3, 3}});  // one value cannot split into {0,1}
    CHECK_THROWS_AS(two_z_strict_decide(flat, kRow0), PreconditionError);
  }
}

TEST_CASE("two_z_strict_decide equals greedy on every {0,1} mirror game") {
  // Exhaustive over all 3x3 games with a in {0,1}^9 and b = 1-a.
  for (int bits = 0; bits < 512; ++bits) {
    Game g(3, 3);
    for (int cell = 0; cell < 9; ++cell) {
      int a = (bits >> cell) & 1;
      g.set_a(cell / 3, cell % 3, a);
      g.set_b(cell / 3, cell % 3, 1 - a);
    }
    for (int i = 0; i < 3; ++i) {
      for (PlayerRole role : {PlayerRole::kRow, PlayerRole::kColumn}) {
        Target t{role, i};
        CHECK(two_z_strict_decide(g, t).eliminable ==
              greedy_decide(g, t, Notion::kStrict).eliminable);
      }
    }
  }
}

TEST_CASE("two_strict_graph_decide") {
  Game constant({{7, 7}, {7, 7}}, {{7, 7}, {7, 7}});
  CHECK_FALSE(two_strict_graph_decide(constant, kRow0).eliminable);

  Game three({{0, 1}, {2, 0}}, {{2, 1}, {0, 2}});
  CHECK_THROWS_AS(two_strict_graph_decide(three, kRow0), PreconditionError);

  std::mt19937_64 rng(47);
  for (int n = 0; n < 250; ++n) {
    Game g = random_two_value_game(rng, 5, 5);
    for (int i = 0; i < g.rows(); ++i) {
      Target t{PlayerRole::kRow, i};
      DecisionResult fast = two_strict_graph_decide(g, t);
      CHECK(fast.eliminable == greedy_decide(g, t, Notion::kStrict).eliminable);
      CHECK(check_yes_trace(g, fast, t));
    }
    for (int j = 0; j < g.cols(); ++j) {
      Target t{PlayerRole::kColumn, j};
      CHECK(two_strict_graph_decide(g, t).eliminable ==
            greedy_decide(g, t, Notion::kStrict).eliminable);
    }
  }
}

TEST_CASE("three_z_strict_graph_decide") {
  SUBCASE("delegation on an all-high row") {
    Game g({{2, 2}, {1, 0}}, {{0, 0}, {1, 2}});
    REQUIRE(constant_sum_of(g) == 2);
    for (int i = 0; i < 2; ++i) {
      Target t{PlayerRole::kRow, i};
      CHECK(three_z_strict_graph_decide(g, t).eliminable ==
            greedy_decide(g, t, Notion::kStrict).eliminable);
    }
  }
  SUBCASE("preconditions") {
    Game skew({{1, 0}}, {{0, 0}});
    CHECK_THROWS_AS(three_z_strict_graph_decide(skew, kRow0),
                    PreconditionError);
    Game four({{0, 1}, {2, 3}}, {{3, 2}, {1, 0}});
    CHECK_THROWS_AS(three_z_strict_graph_decide(four, kRow0),
                    PreconditionError);
  }
  SUBCASE("agreement with greedy on conforming games") {
    std::mt19937_64 rng(53);
    for (int n = 0; n < 250; ++n) {
      Game g = random_three_value_constant_sum_game(rng, 5, 5);
      for (int i = 0; i < g.rows(); ++i) {
        Target t{PlayerRole::kRow, i};
        DecisionResult fast = three_z_strict_graph_decide(g, t);
        CHECK(fast.eliminable ==
              greedy_decide(g, t, Notion::kStrict).eliminable);
        CHECK(check_yes_trace(g, fast, t));
      }
      for (int j = 0; j < g.cols(); ++j) {
        Target t{PlayerRole::kColumn, j};
        CHECK(three_z_strict_graph_decide(g, t).eliminable ==
              greedy_decide(g, t, Notion::kStrict).eliminable);
      }
    }
  }
}

TEST_CASE("response_decide") {
  Game pennies({{1, 0}, {0, 1}}, {{0, 1}, {1, 0}});
  CHECK_FALSE(response_decide(pennies, kRow0).eliminable);
  CHECK_FALSE(response_decide(pennies, kRow1).eliminable);

  Game g({{1, 1}, {0, 0}}, {{0, 0}, {0, 0}});
  DecisionResult yes = response_decide(g, kRow1);
  CHECK(yes.eliminable);
  CHECK(check_yes_trace(g, yes, kRow1));

  Game single({{0}}, {{0}});
  CHECK_FALSE(response_decide(single, kRow0).eliminable);

  std::mt19937_64 rng(59);
  for (int n = 0; n < 200; ++n) {
    Game h = random_game(rng, 5, 5, 0, 3);
    for (int i = 0; i < h.rows(); ++i) {
      Target t{PlayerRole::kRow, i};
      DecisionResult fast = response_decide(h, t);
      CHECK(fast.eliminable ==
            greedy_decide(h, t, Notion::kNeverBestResponse).eliminable);
      CHECK(check_yes_trace(h, fast, t));
    }
    for (int j = 0; j < h.cols(); ++j) {
      Target t{PlayerRole::kColumn, j};
      CHECK(response_decide(h, t).eliminable ==
            greedy_decide(h, t, Notion::kNeverBestResponse).eliminable);
    }
  }
}

TEST_CASE("strict reduction is order invariant on random games") {
  std::mt19937_64 rng(61);
  for (int n = 0; n < 200; ++n) {
    Game g = random_game(rng, 5, 5, 0, 3);
    Subgame reduced = greedy_reduce(g, Notion::kStrict).first;
    for (int s = 0; s < 8; ++s)
      CHECK(greedy_reduce(g, Notion::kStrict, rng()).first == reduced);
  }
}

TEST_CASE("order dependence witness on the fixed game") {
  Game g({{1, 0}, {1, 2}, {0, 2}}, {{1, 0}, {1, 1}, {0, 1}});
  auto witness = find_order_dependence(g, Notion::kDominance);
  REQUIRE(witness.has_value());
  CHECK(validate_trace(g, witness->trace_a));
  CHECK(validate_trace(g, witness->trace_b));
  CHECK(canonical_subgame_form(g, witness->trace_a.final) !=
        canonical_subgame_form(g, witness->trace_b.final));

  SUBCASE("strict elimination is out of contract") {
    CHECK_THROWS_AS(find_order_dependence(g, Notion::kStrict),
                    PreconditionError);
  }
  SUBCASE("constant games have a unique (full) fixed point") {
    Game constant({{1, 1}}, {{1, 1}});
    CHECK_FALSE(find_order_dependence(constant, Notion::kWeak).has_value());
    CHECK_FALSE(
        find_order_dependence(constant, Notion::kDominance).has_value());
  }
}

TEST_CASE("order dependence sampling finds a witness") {
  auto witness = order_dependence_search(Notion::kDominance, 3, 3, 2, 500, 1);
  REQUIRE(witness.has_value());
  CHECK(validate_trace(witness->game, witness->trace_a));
  CHECK(validate_trace(witness->game, witness->trace_b));
  CHECK(canonical_subgame_form(witness->game, witness->trace_a.final) !=
        canonical_subgame_form(witness->game, witness->trace_b.final));
}

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

#include "domelim/relations.hpp"

#include <random>
#include <stdexcept>
#include <set>

#include "doctest.h"
#include "domelim/sampling.hpp"
#include "oracle.hpp"

using namespace domelim;

namespace {

std::set<std::pair<PlayerRole, int>> victim_set(
    const std::vector<EliminationStep>& steps) {
  std::set<std::pair<PlayerRole, int>> out;
  for (const auto& step : steps) out.emplace(step.role, step.eliminated);
  return out;
}

}  // namespace

TEST_CASE("strict candidates with least witness") {
  Game g({{2, 2}, {1, 1}}, {{0, 0}, {0, 0}});
  auto steps = find_candidates(g, Subgame::full(g), Notion::kStrict);
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].role == PlayerRole::kRow);
  CHECK(steps[0].eliminated == 1);
  CHECK(steps[0].witness == 0);
}

TEST_CASE("weak candidates include mutual domination of equal rows") {
  Game g({{1, 1}, {1, 1}}, {{1, 1}, {1, 1}});
  auto steps = find_candidates(g, Subgame::full(g), Notion::kWeak);
  // Both rows and both columns dominate each other.
  REQUIRE(steps.size() == 4);
  CHECK(steps[0].role == PlayerRole::kRow);
  CHECK(steps[0].eliminated == 0);
  CHECK(steps[0].witness == 1);
  CHECK(steps[1].eliminated == 1);
  CHECK(steps[1].witness == 0);
  CHECK(steps[2].role == PlayerRole::kColumn);

  SUBCASE("the two weak row steps cannot be applied in sequence") {
    Subgame after = apply_step(Subgame::full(g), steps[0]);
    CHECK_FALSE(validate_step(g, after, steps[1]));
  }
}

TEST_CASE("never-best-response candidates") {
  Game pennies({{1, 0}, {0, 1}}, {{0, 1}, {1, 0}});
  CHECK(find_candidates(pennies, Subgame::full(pennies),
                        Notion::kNeverBestResponse)
            .empty());

  Game g({{1, 1}, {0, 0}}, {{0, 0}, {0, 0}});
  auto steps = find_candidates(g, Subgame::full(g), Notion::kNeverBestResponse);
  REQUIRE(!steps.empty());
  CHECK(steps[0].role == PlayerRole::kRow);
  CHECK(steps[0].eliminated == 1);
  CHECK(steps[0].response_witnesses ==
        std::vector<std::pair<int, int>>{{0, 0}, {1, 0}});
}

TEST_CASE("simultaneous step takes every dominated strategy at once") {
  Game g({{1, 0}, {1, 2}, {0, 2}}, {{1, 0}, {1, 1}, {0, 1}});
  auto step = find_simultaneous_step(g, Subgame::full(g));
  REQUIRE(step.has_value());
  CHECK(step->rows == std::vector<int>{0, 2});
  CHECK(step->cols.empty());
  CHECK(validate_step(g, Subgame::full(g), *step));

  Subgame next = apply_step(Subgame::full(g), *step);
  CHECK(next.rows.members() == std::vector<int>{1});
  CHECK_FALSE(find_simultaneous_step(g, next).has_value());
}

TEST_CASE("validate_step rejects broken witnesses") {
  Game g({{2, 2}, {1, 2}}, {{0, 0}, {0, 0}});
  Subgame full = Subgame::full(g);
  SUBCASE("self domination") {
    EliminationStep step{Notion::kWeak, PlayerRole::kRow, 0, 0, {}};
    CHECK_FALSE(validate_step(g, full, step));
  }
  SUBCASE("strictness violated by a tie") {
    EliminationStep step{Notion::kStrict, PlayerRole::kRow, 1, 0, {}};
    CHECK_FALSE(validate_step(g, full, step));  // ties in column 2
  }
  SUBCASE("candidates validate by construction") {
    for (Notion notion : {Notion::kStrict, Notion::kDominance, Notion::kWeak,
                          Notion::kNeverBestResponse})
      for (const auto& step : find_candidates(g, full, notion))
        CHECK(validate_step(g, full, step));
  }
}

TEST_CASE("apply_step removes exactly the named strategies") {
  Game g({{1, 0}, {0, 1}, {1, 1}}, {{1, 0}, {0, 1}, {1, 1}});
  Subgame full = Subgame::full(g);
  EliminationStep row{Notion::kWeak, PlayerRole::kRow, 1, 2, {}};
  Subgame next = apply_step(full, row);
  CHECK(next.rows.members() == std::vector<int>{0, 2});
  CHECK(next.cols.count() == 2);

  Subgame limit{StrategySet(3), StrategySet(2)};
  limit.rows.remove(1);
  CHECK_THROWS_AS(apply_step(limit, EliminationStep{Notion::kWeak,
                                                    PlayerRole::kRow, 1, 0, {}}),
                  std::invalid_argument);
  // Removing all remaining rows would empty a side.
  SimultaneousStep sim;
  sim.rows = {0, 2};
  CHECK_THROWS_AS(apply_step(limit, sim), std::invalid_argument);
}

TEST_CASE("candidate set inclusions") {
  std::mt19937_64 rng(17);
  for (int n = 0; n < 200; ++n) {
    Game g = random_game(rng, 4, 4, 0, 3);
    Subgame full = Subgame::full(g);
    auto strict = victim_set(find_candidates(g, full, Notion::kStrict));
    auto dominance = victim_set(find_candidates(g, full, Notion::kDominance));
    auto weak = victim_set(find_candidates(g, full, Notion::kWeak));
    auto nbr =
        victim_set(find_candidates(g, full, Notion::kNeverBestResponse));
    for (auto& v : strict) {
      CHECK(dominance.contains(v));
      CHECK(nbr.contains(v));
    }
    for (auto& v : dominance) CHECK(weak.contains(v));

    // Simultaneous removals are exactly the dominance victims.
    auto step = find_simultaneous_step(g, full);
    std::set<std::pair<PlayerRole, int>> sim;
    if (step) {
      for (int v : step->rows) sim.emplace(PlayerRole::kRow, v);
      for (int v : step->cols) sim.emplace(PlayerRole::kColumn, v);
    }
    CHECK(sim == dominance);
  }
}

TEST_CASE("candidates match the reference definitions") {
  std::mt19937_64 rng(23);
  for (int n = 0; n < 150; ++n) {
    Game g = random_game(rng, 4, 3, 0, 2);
    Subgame full = Subgame::full(g);
    oracle::State state = oracle::full_state(g);
    for (Notion notion : {Notion::kStrict, Notion::kDominance, Notion::kWeak,
                          Notion::kNeverBestResponse}) {
      auto steps = find_candidates(g, full, notion);
      // Deterministic order: rows ascending, then columns ascending.
      for (std::size_t k = 1; k < steps.size(); ++k) {
        bool row_before_col = !(steps[k - 1].role == PlayerRole::kColumn &&
                                steps[k].role == PlayerRole::kRow);
        CHECK(row_before_col);
        if (steps[k - 1].role == steps[k].role)
          CHECK(steps[k - 1].eliminated < steps[k].eliminated);
      }
      auto mine = victim_set(steps);
      std::set<std::pair<PlayerRole, int>> reference;
      for (const oracle::State& next : oracle::successors(g, state, notion)) {
        for (int i : state.rows)
          if (!next.rows.contains(i)) reference.emplace(PlayerRole::kRow, i);
        for (int j : state.cols)
          if (!next.cols.contains(j))
            reference.emplace(PlayerRole::kColumn, j);
      }
      CHECK(mine == reference);
      // Witness minimality for the single-witness notions.
      if (notion != Notion::kNeverBestResponse) {
        for (const auto& step : steps) {
          for (int w = 0; w < step.witness; ++w) {
            EliminationStep smaller = step;
            smaller.witness = w;
            CHECK_FALSE(validate_step(g, full, smaller));
          }
        }
      }
    }
  }
}

TEST_CASE("step rendering") {
  EliminationStep step{Notion::kStrict, PlayerRole::kRow, 2, 0, {}};
  CHECK(describe_step(step) == "eliminate row 3 by row 1 [strict]");
  SimultaneousStep sim;
  sim.rows = {0, 2};
  sim.row_witnesses = {{1, 0}, {1, 1}};
  CHECK(describe_step(sim) == "eliminate rows {1,3} cols {} [simultaneous]");
}

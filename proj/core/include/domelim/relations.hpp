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

#ifndef DOMELIM_RELATIONS_HPP_
#define DOMELIM_RELATIONS_HPP_

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "domelim/game.hpp"

namespace domelim {

// The five elimination relations. Naming follows the convention where
// "dominance" requires >= everywhere plus > somewhere, and "weak" means >=
// everywhere with ties allowed (so two equal strategies dominate each other).
enum class Notion {
  kStrict,            // > against every remaining opponent strategy
  kDominance,         // >= everywhere and > somewhere
  kWeak,              // >= everywhere
  kSimultaneous,      // all dominance-dominated strategies removed at once
  kNeverBestResponse  // not a strict best reply to any remaining strategy
};

std::string to_string(Notion notion);
std::optional<Notion> notion_from_string(const std::string& name);

// Removal of one strategy, certified by witnesses. For kStrict, kDominance
// and kWeak the witness is the dominating index. For kNeverBestResponse,
// `response_witnesses` holds, for every remaining opponent strategy, an index
// that responds strictly better than the eliminated one.
struct EliminationStep {
  Notion notion = Notion::kStrict;
  PlayerRole role = PlayerRole::kRow;
  int eliminated = -1;
  int witness = -1;
  std::vector<std::pair<int, int>> response_witnesses;  // (opponent, better)

  friend bool operator==(const EliminationStep&, const EliminationStep&) = default;
};

// One step of simultaneous dominance: removes every currently
// dominance-dominated row and column at once. Witnesses are
// (dominator, strict column) for rows and (dominator, strict row) for
// columns, parallel to `rows` / `cols`.
struct SimultaneousStep {
  std::vector<int> rows;
  std::vector<int> cols;
  std::vector<std::pair<int, int>> row_witnesses;
  std::vector<std::pair<int, int>> col_witnesses;

  bool empty() const { return rows.empty() && cols.empty(); }

  friend bool operator==(const SimultaneousStep&, const SimultaneousStep&) = default;
};

using Step = std::variant<EliminationStep, SimultaneousStep>;

struct EliminationTrace {
  Subgame initial;
  std::vector<Step> steps;
  Subgame final;

  friend bool operator==(const EliminationTrace&, const EliminationTrace&) = default;
};

// All single-strategy elimination candidates of `notion` in subgame `s`:
// eliminable rows in ascending order, then eliminable columns in ascending
// order, each with the least valid witness. Rejects kSimultaneous (use
// find_simultaneous_step).
std::vector<EliminationStep> find_candidates(const Game& g, const Subgame& s,
                                             Notion notion);

// The unique maximal simultaneous step, or nullopt at a fixed point.
std::optional<SimultaneousStep> find_simultaneous_step(const Game& g,
                                                       const Subgame& s);

// True iff the step's witnesses certify the relation in subgame s.
bool validate_step(const Game& g, const Subgame& s, const EliminationStep& step);
bool validate_step(const Game& g, const Subgame& s, const SimultaneousStep& step);
bool validate_step(const Game& g, const Subgame& s, const Step& step);

// Subgame after removing the step's strategies. The step must refer to
// present strategies; semantic validity is validate_step's job.
Subgame apply_step(const Subgame& s, const EliminationStep& step);
Subgame apply_step(const Subgame& s, const SimultaneousStep& step);
Subgame apply_step(const Subgame& s, const Step& step);

// Replays the trace from its initial subgame, validating every step and the
// recorded final subgame.
bool validate_trace(const Game& g, const EliminationTrace& trace);

// Human-readable one-line rendering, 1-based indices.
std::string describe_step(const Step& step);

}  // namespace domelim

#endif  // DOMELIM_RELATIONS_HPP_

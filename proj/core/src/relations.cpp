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

#include <sstream>
#include <stdexcept>

namespace domelim {

namespace {

// Payoff of `role`'s strategy `own` against opponent strategy `opp`.
int own_payoff(const Game& g, PlayerRole role, int own, int opp) {
  return role == PlayerRole::kRow ? g.a(own, opp) : g.b(opp, own);
}

// Whether `witness` dominates `victim` (both of `role`) over the remaining
// opponent strategies, in the sense of `notion`. Only kStrict, kDominance
// and kWeak are meaningful here.
bool dominates(const Game& g, const Subgame& s, PlayerRole role, int witness,
               int victim, Notion notion) {
  if (witness == victim) return false;
  const StrategySet& opp = s.side(opponent(role));
  bool strict_somewhere = false;
  for (int o = 0; o < opp.universe(); ++o) {
    if (!opp.contains(o)) continue;
    int d = own_payoff(g, role, witness, o) - own_payoff(g, role, victim, o);
    if (notion == Notion::kStrict ? d <= 0 : d < 0) return false;
    if (d > 0) strict_somewhere = true;
  }
  return notion == Notion::kDominance ? strict_somewhere : true;
}

// Least index where `witness` is strictly better than `victim`, or -1.
int first_strict_column(const Game& g, const Subgame& s, PlayerRole role,
                        int witness, int victim) {
  const StrategySet& opp = s.side(opponent(role));
  for (int o = 0; o < opp.universe(); ++o) {
    if (!opp.contains(o)) continue;
    if (own_payoff(g, role, witness, o) > own_payoff(g, role, victim, o))
      return o;
  }
  return -1;
}

// Never-best-response witnesses for `victim`: for every remaining opponent
// strategy the least strictly better own strategy, or nullopt if `victim` is
// a best response somewhere.
std::optional<std::vector<std::pair<int, int>>> nbr_witnesses(
    const Game& g, const Subgame& s, PlayerRole role, int victim) {
  const StrategySet& own = s.side(role);
  const StrategySet& opp = s.side(opponent(role));
  std::vector<std::pair<int, int>> out;
  for (int o = 0; o < opp.universe(); ++o) {
    if (!opp.contains(o)) continue;
    int better = -1;
    for (int w = 0; w < own.universe(); ++w) {
      if (!own.contains(w)) continue;
      if (own_payoff(g, role, w, o) > own_payoff(g, role, victim, o)) {
        better = w;
        break;
      }
    }
    if (better < 0) return std::nullopt;
    out.emplace_back(o, better);
  }
  return out;
}

void check_consistent(const Game& g, const Subgame& s) {
  if (!s.consistent_with(g))
    throw std::invalid_argument("subgame inconsistent with game");
}

}  // namespace

std::string to_string(Notion notion) {
  switch (notion) {
    case Notion::kStrict: return "strict";
    case Notion::kDominance: return "dominance";
    case Notion::kWeak: return "weak";
    case Notion::kSimultaneous: return "simultaneous";
    case Notion::kNeverBestResponse: return "nbr";
  }
  return "?";
}

std::optional<Notion> notion_from_string(const std::string& name) {
  if (name == "strict") return Notion::kStrict;
  if (name == "dominance") return Notion::kDominance;
  if (name == "weak") return Notion::kWeak;
  if (name == "simultaneous") return Notion::kSimultaneous;
  if (name == "nbr" || name == "response" || name == "never-best-response")
    return Notion::kNeverBestResponse;
  return std::nullopt;
}

std::vector<EliminationStep> find_candidates(const Game& g, const Subgame& s,
                                             Notion notion) {
  check_consistent(g, s);
  if (notion == Notion::kSimultaneous)
    throw std::invalid_argument(
        "find_candidates: use find_simultaneous_step for simultaneous "
        "dominance");
  std::vector<EliminationStep> out;
  for (PlayerRole role : {PlayerRole::kRow, PlayerRole::kColumn}) {
    const StrategySet& own = s.side(role);
    for (int v = 0; v < own.universe(); ++v) {
      if (!own.contains(v)) continue;
      if (notion == Notion::kNeverBestResponse) {
        if (auto witnesses = nbr_witnesses(g, s, role, v)) {
          EliminationStep step;
          step.notion = notion;
          step.role = role;
          step.eliminated = v;
          step.response_witnesses = std::move(*witnesses);
          out.push_back(std::move(step));
        }
        continue;
      }
      for (int w = 0; w < own.universe(); ++w) {
        if (!own.contains(w) || w == v) continue;
        if (dominates(g, s, role, w, v, notion)) {
          out.push_back(EliminationStep{notion, role, v, w, {}});
          break;
        }
      }
    }
  }
  return out;
}

std::optional<SimultaneousStep> find_simultaneous_step(const Game& g,
                                                       const Subgame& s) {
  check_consistent(g, s);
  SimultaneousStep step;
  for (PlayerRole role : {PlayerRole::kRow, PlayerRole::kColumn}) {
    const StrategySet& own = s.side(role);
    auto& victims = role == PlayerRole::kRow ? step.rows : step.cols;
    auto& witnesses =
        role == PlayerRole::kRow ? step.row_witnesses : step.col_witnesses;
    for (int v = 0; v < own.universe(); ++v) {
      if (!own.contains(v)) continue;
      for (int w = 0; w < own.universe(); ++w) {
        if (!own.contains(w) || w == v) continue;
        if (dominates(g, s, role, w, v, Notion::kDominance)) {
          victims.push_back(v);
          witnesses.emplace_back(w, first_strict_column(g, s, role, w, v));
          break;
        }
      }
    }
  }
  if (step.empty()) return std::nullopt;
  return step;
}

bool validate_step(const Game& g, const Subgame& s,
                   const EliminationStep& step) {
  if (!s.consistent_with(g)) return false;
  if (step.notion == Notion::kSimultaneous) return false;
  const StrategySet& own = s.side(step.role);
  if (step.eliminated < 0 || step.eliminated >= own.universe() ||
      !own.contains(step.eliminated))
    return false;
  if (step.notion == Notion::kNeverBestResponse) {
    const StrategySet& opp = s.side(opponent(step.role));
    StrategySet covered(opp.universe(), false);
    for (auto [o, w] : step.response_witnesses) {
      if (o < 0 || o >= opp.universe() || !opp.contains(o)) return false;
      if (w < 0 || w >= own.universe() || !own.contains(w)) return false;
      if (own_payoff(g, step.role, w, o) <=
          own_payoff(g, step.role, step.eliminated, o))
        return false;
      covered.add(o);
    }
    return covered.count() == opp.count();
  }
  if (step.witness < 0 || step.witness >= own.universe() ||
      !own.contains(step.witness) || step.witness == step.eliminated)
    return false;
  return dominates(g, s, step.role, step.witness, step.eliminated, step.notion);
}

bool validate_step(const Game& g, const Subgame& s,
                   const SimultaneousStep& step) {
  if (!s.consistent_with(g)) return false;
  if (step.empty()) return false;
  if (step.rows.size() != step.row_witnesses.size() ||
      step.cols.size() != step.col_witnesses.size())
    return false;
  // Witness certificates, against the pre-step subgame.
  for (std::size_t k = 0; k < step.rows.size(); ++k) {
    int v = step.rows[k];
    auto [w, jstrict] = step.row_witnesses[k];
    if (v < 0 || v >= s.rows.universe() || !s.rows.contains(v)) return false;
    if (w < 0 || w >= s.rows.universe() || !s.rows.contains(w) || w == v)
      return false;
    if (jstrict < 0 || jstrict >= s.cols.universe() || !s.cols.contains(jstrict))
      return false;
    if (!dominates(g, s, PlayerRole::kRow, w, v, Notion::kWeak)) return false;
    if (g.a(w, jstrict) <= g.a(v, jstrict)) return false;
  }
  for (std::size_t k = 0; k < step.cols.size(); ++k) {
    int v = step.cols[k];
    auto [w, istrict] = step.col_witnesses[k];
    if (v < 0 || v >= s.cols.universe() || !s.cols.contains(v)) return false;
    if (w < 0 || w >= s.cols.universe() || !s.cols.contains(w) || w == v)
      return false;
    if (istrict < 0 || istrict >= s.rows.universe() || !s.rows.contains(istrict))
      return false;
    if (!dominates(g, s, PlayerRole::kColumn, w, v, Notion::kWeak)) return false;
    if (g.b(istrict, w) <= g.b(istrict, v)) return false;
  }
  // Maximality: the removed sets are exactly the dominated sets.
  auto canonical = find_simultaneous_step(g, s);
  if (!canonical) return false;
  auto sorted = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  return sorted(step.rows) == canonical->rows &&
         sorted(step.cols) == canonical->cols;
}

bool validate_step(const Game& g, const Subgame& s, const Step& step) {
  return std::visit([&](const auto& st) { return validate_step(g, s, st); },
                    step);
}

Subgame apply_step(const Subgame& s, const EliminationStep& step) {
  Subgame out = s;
  StrategySet& own = out.side(step.role);
  if (step.eliminated < 0 || step.eliminated >= own.universe() ||
      !own.contains(step.eliminated))
    throw std::invalid_argument("apply_step: eliminated strategy not present");
  if (own.count() <= 1)
    throw std::invalid_argument("apply_step: would empty a side");
  own.remove(step.eliminated);
  return out;
}

Subgame apply_step(const Subgame& s, const SimultaneousStep& step) {
  Subgame out = s;
  for (int v : step.rows) {
    if (!out.rows.contains(v))
      throw std::invalid_argument("apply_step: eliminated row not present");
    out.rows.remove(v);
  }
  for (int v : step.cols) {
    if (!out.cols.contains(v))
      throw std::invalid_argument("apply_step: eliminated column not present");
    out.cols.remove(v);
  }
  if (out.rows.empty() || out.cols.empty())
    throw std::invalid_argument("apply_step: would empty a side");
  return out;
}

Subgame apply_step(const Subgame& s, const Step& step) {
  return std::visit([&](const auto& st) { return apply_step(s, st); }, step);
}

bool validate_trace(const Game& g, const EliminationTrace& trace) {
  if (!trace.initial.consistent_with(g)) return false;
  Subgame current = trace.initial;
  for (const Step& step : trace.steps) {
    if (!validate_step(g, current, step)) return false;
    current = apply_step(current, step);
  }
  return current == trace.final;
}

std::string describe_step(const Step& step) {
  std::ostringstream os;
  if (const auto* single = std::get_if<EliminationStep>(&step)) {
    os << "eliminate " << to_string(single->role) << " "
       << (single->eliminated + 1) << " by ";
    if (single->notion == Notion::kNeverBestResponse) {
      os << "best responses";
      for (auto [o, w] : single->response_witnesses)
        os << " " << to_string(opponent(single->role)) << " " << (o + 1)
           << "->" << to_string(single->role) << " " << (w + 1);
    } else {
      os << to_string(single->role) << " " << (single->witness + 1);
    }
    os << " [" << to_string(single->notion) << "]";
  } else {
    const auto& sim = std::get<SimultaneousStep>(step);
    auto list = [&os](const std::vector<int>& v) {
      os << "{";
      for (std::size_t k = 0; k < v.size(); ++k)
        os << (k ? "," : "") << (v[k] + 1);
      os << "}";
    };
    os << "eliminate rows ";
    list(sim.rows);
    os << " cols ";
    list(sim.cols);
    os << " [simultaneous]";
  }
  return os.str();
}

}  // namespace domelim

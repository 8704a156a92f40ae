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

#ifndef DOMELIM_CNF_HPP_
#define DOMELIM_CNF_HPP_

#include <array>
#include <string>
#include <vector>

namespace domelim {

struct Literal {
  int variable = 0;  // 0-based
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

// 3-CNF formula: every clause holds exactly three pairwise distinct
// literals, and no clause's literal set is a subset of another's (with fixed
// width three that means pairwise distinct sets).
struct Cnf3 {
  int variable_count = 0;
  std::vector<std::array<Literal, 3>> clauses;
};

// Empty string if valid, otherwise a description of the first violated
// clause-set invariant.
std::string validate_cnf3(const Cnf3& f);

// Exhaustive assignment enumeration; rejects more than 24 variables.
bool sat_brute_force(const Cnf3& f);

bool clause_satisfied(const std::array<Literal, 3>& clause,
                      const std::vector<bool>& assignment);

}  // namespace domelim

#endif  // DOMELIM_CNF_HPP_

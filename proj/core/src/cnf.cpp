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

#include "domelim/cnf.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "domelim/error.hpp"

namespace domelim {

std::string validate_cnf3(const Cnf3& f) {
  std::set<std::set<Literal>> seen;
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    std::set<Literal> literals;
    for (const Literal& l : f.clauses[c]) {
      if (l.variable < 0 || l.variable >= f.variable_count) {
        std::ostringstream os;
        os << "clause " << c + 1 << ": variable index out of range";
        return os.str();
      }
      literals.insert(l);
    }
    if (literals.size() != 3) {
      std::ostringstream os;
      os << "clause " << c + 1 << ": repeated literal";
      return os.str();
    }
    if (!seen.insert(literals).second) {
      std::ostringstream os;
      os << "clause " << c + 1
         << ": literal set duplicates an earlier clause (subset-freeness)";
      return os.str();
    }
  }
  return "";
}

bool clause_satisfied(const std::array<Literal, 3>& clause,
                      const std::vector<bool>& assignment) {
  for (const Literal& l : clause)
    if (assignment[l.variable] == l.positive) return true;
  return false;
}

bool sat_brute_force(const Cnf3& f) {
  if (f.variable_count > 24)
    throw BudgetError("sat_brute_force supports at most 24 variables");
  std::vector<bool> assignment(f.variable_count);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.variable_count);
       ++bits) {
    for (int v = 0; v < f.variable_count; ++v)
      assignment[v] = (bits >> v) & 1;
    bool ok = true;
    for (const auto& clause : f.clauses)
      if (!clause_satisfied(clause, assignment)) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace domelim

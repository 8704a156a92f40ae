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

#ifndef DOMELIM_ERROR_HPP_
#define DOMELIM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace domelim {

// Malformed input file or text.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Input is well-formed but outside the contract of the requested operation,
// e.g. a non-constant-sum game handed to a constant-sum decider.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what)
      : std::runtime_error(what) {}
};

// A search exceeded its configured state or size budget. Distinct from a NO
// answer.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace domelim

#endif  // DOMELIM_ERROR_HPP_

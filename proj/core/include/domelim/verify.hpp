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

#ifndef DOMELIM_VERIFY_HPP_
#define DOMELIM_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace domelim {

// Randomized cross-checks of the deciders against each other and of the
// gadgets against their source-problem oracles. Deterministic in the seed.
struct SuiteOptions {
  std::uint64_t seed = 0;
  int count = 500;
  int max_size = 5;
};

struct SuiteResult {
  int checks = 0;
  int failures = 0;
  // One line per sub-check: "<name>: <passed>/<run>". Failures append the
  // first counterexample, serialized inline.
  std::vector<std::string> lines;

  bool ok() const { return failures == 0; }
};

SuiteResult run_decider_suite(const SuiteOptions& options);
SuiteResult run_gadget_suite(const SuiteOptions& options);
SuiteResult run_invariant_suite(const SuiteOptions& options);
SuiteResult run_order_dependence_suite(const SuiteOptions& options);

// Dispatch by name: deciders | gadgets | invariants | order-dependence.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace domelim

#endif  // DOMELIM_VERIFY_HPP_

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

#ifndef DOMELIM_CIRCUITS_HPP_
#define DOMELIM_CIRCUITS_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace domelim {

enum class GateKind { kAnd, kOr, kFalse };

std::string to_string(GateKind kind);

// Monotone circuit: a DAG whose vertices are labeled And/Or/False. False
// vertices have no inputs; And and Or vertices have at most two. The root is
// the unique vertex without consumers. An And with no inputs evaluates to
// true, which stands in for constant-true vertices.
struct MonotoneCircuit {
  struct Vertex {
    GateKind kind = GateKind::kAnd;
    std::vector<int> inputs;

    friend bool operator==(const Vertex&, const Vertex&) = default;
  };

  std::vector<Vertex> vertices;
  int root = -1;

  int size() const { return static_cast<int>(vertices.size()); }
  int count(GateKind kind) const;

  friend bool operator==(const MonotoneCircuit&, const MonotoneCircuit&) = default;
};

// Empty string if `c` is a well-formed monotone circuit, otherwise the first
// violated structural requirement.
std::string validate_circuit(const MonotoneCircuit& c);

struct CircuitValues {
  std::vector<bool> values;  // per vertex
  bool root = false;
};

// Topological evaluation. Rejects structurally invalid circuits.
CircuitValues eval_circuit(const MonotoneCircuit& c);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Restricted normal form 1: And/Or alternating, every False feeds exactly
// one Or, Or in-degree exactly two, no two vertices share a nonempty input
// set, root is an And, at least one vertex of each label.
ValidationReport validate_mcv1(const MonotoneCircuit& c);

// Restricted normal form 2: alternating, Or inputs are Ands only with
// in-degree exactly two and pairwise unequal input sets, each And has at
// most one False input, And input sets pairwise disjoint, root is an And
// without False inputs.
ValidationReport validate_mcv2(const MonotoneCircuit& c);

enum class McvFlavor { kMcv1, kMcv2 };

// Deterministic-in-seed random circuit that passes the flavor's validator.
// `size` caps the vertex count; at least 4 is required and for kMcv1 sizes
// >= 7 always contain two Or vertices.
MonotoneCircuit random_mcv(McvFlavor flavor, int size, std::uint64_t seed);

}  // namespace domelim

#endif  // DOMELIM_CIRCUITS_HPP_

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

#include "domelim/circuits.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "domelim/error.hpp"

namespace domelim {

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::kAnd: return "AND";
    case GateKind::kOr: return "OR";
    case GateKind::kFalse: return "FALSE";
  }
  return "?";
}

int MonotoneCircuit::count(GateKind kind) const {
  int n = 0;
  for (const Vertex& v : vertices)
    if (v.kind == kind) ++n;
  return n;
}

std::string validate_circuit(const MonotoneCircuit& c) {
  int n = c.size();
  if (n == 0) return "circuit has no vertices";
  if (c.root < 0 || c.root >= n) return "root out of range";
  std::vector<int> out_degree(n, 0);
  for (int v = 0; v < n; ++v) {
    const auto& vertex = c.vertices[v];
    std::set<int> seen;
    for (int in : vertex.inputs) {
      if (in < 0 || in >= n) return "input index out of range";
      if (!seen.insert(in).second) return "duplicate input edge";
      ++out_degree[in];
    }
    if (vertex.kind == GateKind::kFalse && !vertex.inputs.empty())
      return "FALSE vertex with inputs";
    if (vertex.kind != GateKind::kFalse && vertex.inputs.size() > 2)
      return "vertex with in-degree above two";
  }
  for (int v = 0; v < n; ++v) {
    if (v == c.root && out_degree[v] != 0)
      return "root has a consumer";
    if (v != c.root && out_degree[v] == 0)
      return "vertex other than the root has no consumer";
  }
  // Acyclicity via Kahn's algorithm over input edges.
  std::vector<int> pending(n);
  std::queue<int> ready;
  std::vector<std::vector<int>> consumers(n);
  for (int v = 0; v < n; ++v) {
    pending[v] = static_cast<int>(c.vertices[v].inputs.size());
    for (int in : c.vertices[v].inputs) consumers[in].push_back(v);
    if (pending[v] == 0) ready.push(v);
  }
  int processed = 0;
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop();
    ++processed;
    for (int w : consumers[v])
      if (--pending[w] == 0) ready.push(w);
  }
  if (processed != n) return "circuit contains a cycle";
  return "";
}

CircuitValues eval_circuit(const MonotoneCircuit& c) {
  std::string problem = validate_circuit(c);
  if (!problem.empty()) throw PreconditionError("eval_circuit: " + problem);
  int n = c.size();
  CircuitValues out;
  out.values.assign(n, false);
  std::vector<int> pending(n);
  std::vector<std::vector<int>> consumers(n);
  std::queue<int> ready;
  for (int v = 0; v < n; ++v) {
    pending[v] = static_cast<int>(c.vertices[v].inputs.size());
    for (int in : c.vertices[v].inputs) consumers[in].push_back(v);
    if (pending[v] == 0) ready.push(v);
  }
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop();
    const auto& vertex = c.vertices[v];
    switch (vertex.kind) {
      case GateKind::kFalse:
        out.values[v] = false;
        break;
      case GateKind::kAnd: {
        bool value = true;  // empty conjunction
        for (int in : vertex.inputs) value = value && out.values[in];
        out.values[v] = value;
        break;
      }
      case GateKind::kOr: {
        bool value = false;  // empty disjunction
        for (int in : vertex.inputs) value = value || out.values[in];
        out.values[v] = value;
        break;
      }
    }
    for (int w : consumers[v])
      if (--pending[w] == 0) ready.push(w);
  }
  out.root = out.values[c.root];
  return out;
}

namespace {

void add_violation(ValidationReport& report, int vertex, const std::string& what) {
  std::ostringstream os;
  os << "v" << vertex + 1 << ": " << what;
  report.violations.push_back(os.str());
}

std::vector<std::vector<int>> consumer_lists(const MonotoneCircuit& c) {
  std::vector<std::vector<int>> consumers(c.size());
  for (int v = 0; v < c.size(); ++v)
    for (int in : c.vertices[v].inputs) consumers[in].push_back(v);
  return consumers;
}

// Nonempty input sets must be pairwise distinct.
void check_shared_inputs(const MonotoneCircuit& c, ValidationReport& report) {
  std::set<std::set<int>> seen;
  for (int v = 0; v < c.size(); ++v) {
    std::set<int> inputs(c.vertices[v].inputs.begin(),
                         c.vertices[v].inputs.end());
    if (inputs.empty()) continue;
    if (!seen.insert(inputs).second)
      add_violation(report, v, "shares all inputs with another vertex");
  }
}

}  // namespace

ValidationReport validate_mcv1(const MonotoneCircuit& c) {
  ValidationReport report;
  std::string base = validate_circuit(c);
  if (!base.empty()) {
    report.violations.push_back(base);
    return report;
  }
  auto consumers = consumer_lists(c);
  for (int v = 0; v < c.size(); ++v) {
    const auto& vertex = c.vertices[v];
    switch (vertex.kind) {
      case GateKind::kAnd:
        for (int in : vertex.inputs)
          if (c.vertices[in].kind != GateKind::kOr)
            add_violation(report, v, "AND vertex with a non-OR input");
        break;
      case GateKind::kOr:
        if (vertex.inputs.size() != 2)
          add_violation(report, v, "OR vertex without in-degree two");
        for (int in : vertex.inputs)
          if (c.vertices[in].kind == GateKind::kOr)
            add_violation(report, v, "OR vertex fed by an OR vertex");
        break;
      case GateKind::kFalse:
        if (consumers[v].size() != 1 ||
            c.vertices[consumers[v][0]].kind != GateKind::kOr)
          add_violation(report, v,
                        "FALSE vertex must feed exactly one OR vertex");
        break;
    }
  }
  check_shared_inputs(c, report);
  if (c.vertices[c.root].kind != GateKind::kAnd)
    add_violation(report, c.root, "root is not an AND vertex");
  for (GateKind kind : {GateKind::kAnd, GateKind::kOr, GateKind::kFalse})
    if (c.count(kind) == 0)
      report.violations.push_back("no " + to_string(kind) + " vertex present");
  return report;
}

ValidationReport validate_mcv2(const MonotoneCircuit& c) {
  ValidationReport report;
  std::string base = validate_circuit(c);
  if (!base.empty()) {
    report.violations.push_back(base);
    return report;
  }
  std::set<int> and_inputs_seen;
  std::set<std::set<int>> or_pairs;
  for (int v = 0; v < c.size(); ++v) {
    const auto& vertex = c.vertices[v];
    switch (vertex.kind) {
      case GateKind::kAnd: {
        int false_inputs = 0;
        for (int in : vertex.inputs) {
          GateKind kind = c.vertices[in].kind;
          if (kind == GateKind::kAnd)
            add_violation(report, v, "AND vertex fed by an AND vertex");
          if (kind == GateKind::kFalse) ++false_inputs;
          if (!and_inputs_seen.insert(in).second)
            add_violation(report, v,
                          "AND vertices must have pairwise disjoint inputs");
        }
        if (false_inputs > 1)
          add_violation(report, v, "AND vertex with two FALSE inputs");
        if (v == c.root && false_inputs > 0)
          add_violation(report, v, "root AND must not have a FALSE input");
        break;
      }
      case GateKind::kOr: {
        if (vertex.inputs.size() != 2)
          add_violation(report, v, "OR vertex without in-degree two");
        for (int in : vertex.inputs)
          if (c.vertices[in].kind != GateKind::kAnd)
            add_violation(report, v, "OR vertex with a non-AND input");
        std::set<int> pair(vertex.inputs.begin(), vertex.inputs.end());
        if (!or_pairs.insert(pair).second)
          add_violation(report, v, "OR vertices must have unequal inputs");
        break;
      }
      case GateKind::kFalse:
        break;
    }
  }
  if (c.vertices[c.root].kind != GateKind::kAnd)
    add_violation(report, c.root, "root is not an AND vertex");
  return report;
}

namespace {

// Both generators grow an alternating tree from the root downward, spending
// from a shared vertex budget. `reserved` holds budget set aside for
// siblings that still must be created, so a deep first subtree cannot starve
// a mandatory second child.
class McvGenerator {
 public:
  McvGenerator(int size, std::uint64_t seed) : budget_(size), rng_(seed) {}

  MonotoneCircuit generate1() {
    int root = make_and1(/*is_root=*/true);
    circuit_.root = root;
    ensure_false_vertex();
    return std::move(circuit_);
  }

  MonotoneCircuit generate2() {
    int root = make_and2(/*is_root=*/true);
    circuit_.root = root;
    return std::move(circuit_);
  }

 private:
  int new_vertex(GateKind kind) {
    circuit_.vertices.push_back({kind, {}});
    --budget_;
    return circuit_.size() - 1;
  }

  int available() const { return budget_ - reserved_; }
  bool chance(double p) {
    return std::uniform_real_distribution<double>(0, 1)(rng_) < p;
  }
  int pick(int bound) {
    return std::uniform_int_distribution<int>(0, bound - 1)(rng_);
  }

  // ---- restricted form 1 ----

  int make_and1(bool is_root) {
    int a = new_vertex(GateKind::kAnd);
    int k = 0;
    if (is_root) {
      k = available() >= 6 ? 2 : 1;  // two OR subtrees whenever affordable
    } else {
      if (available() >= 3 && chance(0.8)) k = 1;
      if (k == 1 && available() >= 6 && chance(0.5)) k = 2;
    }
    if (k == 2) reserved_ += 3;
    for (int t = 0; t < k; ++t) {
      if (t == 1) reserved_ -= 3;
      int o = make_or1();
      circuit_.vertices[a].inputs.push_back(o);
    }
    return a;
  }

  int make_or1() {
    int o = new_vertex(GateKind::kOr);
    reserved_ += 1;
    int c1 = make_or1_child();
    reserved_ -= 1;
    int c2 = make_or1_child();
    circuit_.vertices[o].inputs = {c1, c2};
    return o;
  }

  int make_or1_child() {
    if (chance(0.45)) return new_vertex(GateKind::kFalse);
    return make_and1(false);
  }

  // A FALSE vertex is mandatory; if the dice produced none, demote the first
  // OR-fed leaf AND. Its single consumer is an OR, so the result stays valid.
  void ensure_false_vertex() {
    if (circuit_.count(GateKind::kFalse) > 0) return;
    for (const auto& vertex : circuit_.vertices) {
      if (vertex.kind != GateKind::kOr) continue;
      for (int in : vertex.inputs) {
        if (circuit_.vertices[in].kind == GateKind::kAnd &&
            circuit_.vertices[in].inputs.empty()) {
          circuit_.vertices[in].kind = GateKind::kFalse;
          return;
        }
      }
    }
  }

  // ---- restricted form 2 ----

  int make_and2(bool is_root) {
    int a = new_vertex(GateKind::kAnd);
    int or_children = 0;
    if (is_root) {
      or_children = 1;
      if (available() >= 6 && chance(0.6)) or_children = 2;
    } else {
      if (available() >= 3 && chance(0.65)) or_children = 1;
      if (or_children == 1 && available() >= 6 && chance(0.4)) or_children = 2;
    }
    bool false_child = !is_root && or_children < 2 && available() >= 1 &&
                       chance(or_children == 0 ? 0.6 : 0.3);
    if (or_children == 2) reserved_ += 3;
    for (int t = 0; t < or_children; ++t) {
      if (t == 1) reserved_ -= 3;
      int o = make_or2();
      circuit_.vertices[a].inputs.push_back(o);
    }
    if (false_child) {
      int f = new_vertex(GateKind::kFalse);
      circuit_.vertices[a].inputs.push_back(f);
    }
    completed_ands_.push_back(a);
    return a;
  }

  int make_or2() {
    int o = new_vertex(GateKind::kOr);
    reserved_ += 1;
    int c1 = make_or2_child(-1);
    reserved_ -= 1;
    int c2 = make_or2_child(c1);
    if (!or_pairs_.insert({std::min(c1, c2), std::max(c1, c2)}).second) {
      // Equal input pair with an earlier OR; a fresh subtree is always new.
      c2 = make_and2(false);
      or_pairs_.insert({std::min(c1, c2), std::max(c1, c2)});
    }
    circuit_.vertices[o].inputs = {c1, c2};
    return o;
  }

  int make_or2_child(int sibling) {
    if (!completed_ands_.empty() && chance(0.35)) {
      int c = completed_ands_[pick(static_cast<int>(completed_ands_.size()))];
      if (c != sibling) return c;
    }
    return make_and2(false);
  }

  MonotoneCircuit circuit_;
  int budget_ = 0;
  int reserved_ = 0;
  std::mt19937_64 rng_;
  std::vector<int> completed_ands_;
  std::set<std::pair<int, int>> or_pairs_;
};

}  // namespace

MonotoneCircuit random_mcv(McvFlavor flavor, int size, std::uint64_t seed) {
  if (size < 4)
    throw PreconditionError("random_mcv needs a size of at least 4");
  McvGenerator gen(size, seed);
  return flavor == McvFlavor::kMcv1 ? gen.generate1() : gen.generate2();
}

}  // namespace domelim

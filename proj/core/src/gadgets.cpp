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

#include "domelim/gadgets.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "domelim/error.hpp"

namespace domelim {

namespace {

std::string vertex_name(GateKind kind, int id) {
  std::ostringstream os;
  switch (kind) {
    case GateKind::kAnd: os << "and"; break;
    case GateKind::kOr: os << "or"; break;
    case GateKind::kFalse: os << "bot"; break;
  }
  os << id + 1;
  return os.str();
}

bool has_input(const MonotoneCircuit& c, int vertex, int input) {
  const auto& inputs = c.vertices[vertex].inputs;
  return std::find(inputs.begin(), inputs.end(), input) != inputs.end();
}

void require_mcv1(const MonotoneCircuit& c) {
  ValidationReport report = validate_mcv1(c);
  if (!report.ok())
    throw PreconditionError("not a restricted-form-1 circuit: " +
                            report.violations.front());
}

std::vector<int> vertices_of(const MonotoneCircuit& c, GateKind kind) {
  std::vector<int> out;
  for (int v = 0; v < c.size(); ++v)
    if (c.vertices[v].kind == kind) out.push_back(v);
  return out;
}

}  // namespace

std::optional<int> GadgetOutput::row_named(const std::string& name) const {
  for (std::size_t i = 0; i < row_names.size(); ++i)
    if (row_names[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> GadgetOutput::col_named(const std::string& name) const {
  for (std::size_t j = 0; j < col_names.size(); ++j)
    if (col_names[j] == name) return static_cast<int>(j);
  return std::nullopt;
}

GadgetOutput gadget_cyclereach_to_2strict(const CycleReachInstance& inst) {
  BipartiteSubdivision sub = subdivide_bipartite(inst.graph);
  int original = inst.graph.vertex_count();
  std::vector<int> row_of(sub.graph.vertex_count(), -1);
  std::vector<int> col_of(sub.graph.vertex_count(), -1);
  std::vector<std::string> row_names, col_names;
  for (int v = 0; v < sub.graph.vertex_count(); ++v) {
    std::ostringstream name;
    name << (v < original ? "v" : "x") << v + 1;
    if (sub.left[v]) {
      row_of[v] = static_cast<int>(row_names.size());
      row_names.push_back("s_" + name.str());
    } else {
      col_of[v] = static_cast<int>(col_names.size());
      col_names.push_back("t_" + name.str());
    }
  }
  int star_row = static_cast<int>(row_names.size());
  int star_col = static_cast<int>(col_names.size());
  row_names.push_back("r*");
  col_names.push_back("c*");

  Game game(star_row + 1, star_col + 1);
  for (int j = 0; j <= star_col; ++j) game.set_a(star_row, j, 1);
  for (int i = 0; i <= star_row; ++i) game.set_b(i, star_col, 1);
  for (auto [u, v] : sub.graph.edges()) {
    if (sub.left[u])
      game.set_a(row_of[u], col_of[v], 1);
    else
      game.set_b(row_of[v], col_of[u], 1);
  }

  GadgetOutput out;
  out.game = std::move(game);
  out.target_role = PlayerRole::kRow;
  out.target_index = row_of[inst.source];
  out.row_names = std::move(row_names);
  out.col_names = std::move(col_names);
  out.semantics =
      "vertex strategy strictly eliminable iff no cycle reachable from the "
      "vertex (YES answers the complement of cycle reachability)";
  return out;
}

GadgetOutput gadget_cyclereach_to_3zstrict(const CycleReachInstance& inst) {
  BipartiteSubdivision sub = subdivide_bipartite(inst.graph);
  int original = inst.graph.vertex_count();
  std::vector<int> row_of(sub.graph.vertex_count(), -1);
  std::vector<int> col_of(sub.graph.vertex_count(), -1);
  std::vector<std::string> row_names{"s"};
  std::vector<std::string> col_names{"t"};
  for (int v = 0; v < sub.graph.vertex_count(); ++v) {
    std::ostringstream name;
    name << (v < original ? "v" : "x") << v + 1;
    if (sub.left[v]) {
      row_of[v] = static_cast<int>(row_names.size());
      row_names.push_back("s_" + name.str());
    } else {
      col_of[v] = static_cast<int>(col_names.size());
      col_names.push_back("t_" + name.str());
    }
  }

  int rows = static_cast<int>(row_names.size());
  int cols = static_cast<int>(col_names.size());
  Game game(rows, cols);
  game.set_a(0, 0, 1);                                  // s against t
  for (int j = 1; j < cols; ++j) game.set_a(0, j, 2);   // s against t_v
  for (int i = 1; i < rows; ++i) game.set_a(i, 0, 0);   // s_u against t
  // Subdivision guarantees at most one of (u,v), (v,u) is an edge.
  for (int v = 0; v < sub.graph.vertex_count(); ++v) {
    if (!sub.left[v]) continue;
    for (int w = 0; w < sub.graph.vertex_count(); ++w) {
      if (sub.left[w]) continue;
      int value = 1;
      if (sub.graph.has_edge(v, w)) value = 2;
      else if (sub.graph.has_edge(w, v)) value = 0;
      game.set_a(row_of[v], col_of[w], value);
    }
  }
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) game.set_b(i, j, 2 - game.a(i, j));

  GadgetOutput out;
  out.game = std::move(game);
  out.target_role = PlayerRole::kRow;
  out.target_index = row_of[inst.source];
  out.row_names = std::move(row_names);
  out.col_names = std::move(col_names);
  out.semantics =
      "vertex strategy strictly eliminable iff no cycle reachable from the "
      "vertex (YES answers the complement of cycle reachability)";
  return out;
}

GadgetOutput gadget_mcv1_to_3z(const MonotoneCircuit& c) {
  require_mcv1(c);
  std::vector<int> ands = vertices_of(c, GateKind::kAnd);
  std::vector<int> ors = vertices_of(c, GateKind::kOr);
  std::vector<int> falses = vertices_of(c, GateKind::kFalse);

  GadgetOutput out;
  out.row_names.push_back("s_B");
  std::vector<std::pair<char, int>> row_src{{'B', -1}};
  for (int v : ands) {
    out.row_names.push_back("s_" + vertex_name(GateKind::kAnd, v));
    row_src.emplace_back('a', v);
  }
  for (int v : falses) {
    out.row_names.push_back("s_" + vertex_name(GateKind::kFalse, v));
    row_src.emplace_back('f', v);
  }
  std::vector<std::pair<char, int>> col_src;
  for (int v : ands) {
    out.col_names.push_back("t_" + vertex_name(GateKind::kAnd, v));
    col_src.emplace_back('a', v);
  }
  for (int v : falses) {
    out.col_names.push_back("t_" + vertex_name(GateKind::kFalse, v));
    col_src.emplace_back('f', v);
  }
  for (int v : ors) {
    out.col_names.push_back("t_" + vertex_name(GateKind::kOr, v));
    col_src.emplace_back('o', v);
  }

  Game game(static_cast<int>(row_src.size()), static_cast<int>(col_src.size()));
  for (std::size_t i = 0; i < row_src.size(); ++i) {
    auto [rkind, rv] = row_src[i];
    for (std::size_t j = 0; j < col_src.size(); ++j) {
      auto [ckind, cv] = col_src[j];
      int value = 0;
      if (rkind == 'B') {
        value = 0;
      } else if (rkind == 'a') {
        if (ckind == 'a') value = cv == rv ? -1 : 0;
        else if (ckind == 'f') value = 0;
        else if (has_input(c, rv, cv)) value = 1;       // or feeds this and
        else if (has_input(c, cv, rv)) value = -1;      // this and feeds or
      } else {  // s_bot row
        if (ckind == 'a') value = 1;
        else if (ckind == 'f') value = cv == rv ? -1 : 1;
        // The +1 against foreign OR columns keeps this row undominated
        // while the question is open, yet lets the column of an OR's last
        // remaining input take the OR's column down once the other input
        // has resolved to true.
        else value = has_input(c, cv, rv) ? -1 : 1;
      }
      game.set_a(static_cast<int>(i), static_cast<int>(j), value);
      game.set_b(static_cast<int>(i), static_cast<int>(j), -value);
    }
  }

  out.game = std::move(game);
  out.target_role = PlayerRole::kRow;
  out.target_index = *out.row_named("s_" + vertex_name(GateKind::kAnd, c.root));
  out.semantics =
      "root evaluates true iff the target is eliminable; identical under "
      "weak, dominance and simultaneous elimination";
  return out;
}

GadgetOutput gadget_mcv1_to_3strict(const MonotoneCircuit& c) {
  require_mcv1(c);
  std::vector<int> ands = vertices_of(c, GateKind::kAnd);
  std::vector<int> ors = vertices_of(c, GateKind::kOr);
  std::vector<int> falses = vertices_of(c, GateKind::kFalse);

  GadgetOutput out;
  std::vector<std::pair<char, int>> row_src;
  for (int v : ands) {
    out.row_names.push_back("s_" + vertex_name(GateKind::kAnd, v));
    row_src.emplace_back('a', v);
  }
  for (int v : falses) {
    out.row_names.push_back("s_" + vertex_name(GateKind::kFalse, v));
    row_src.emplace_back('f', v);
  }
  std::vector<std::pair<char, int>> col_src;
  for (int v : ands) {
    out.col_names.push_back("t_" + vertex_name(GateKind::kAnd, v));
    col_src.emplace_back('a', v);
  }
  for (int v : falses) {
    out.col_names.push_back("t_" + vertex_name(GateKind::kFalse, v));
    col_src.emplace_back('f', v);
  }
  for (int v : ors) {
    out.col_names.push_back("t_" + vertex_name(GateKind::kOr, v));
    col_src.emplace_back('o', v);
  }

  Game game(static_cast<int>(row_src.size()), static_cast<int>(col_src.size()));
  for (std::size_t i = 0; i < row_src.size(); ++i) {
    auto [rkind, rv] = row_src[i];
    for (std::size_t j = 0; j < col_src.size(); ++j) {
      auto [ckind, cv] = col_src[j];
      int a = 0, b = 0;
      if (rkind == 'a') {
        if (ckind == 'a') {
          a = 0;
          b = cv == rv ? 1 : 0;
        } else if (ckind == 'f') {
          a = 0;
          b = 0;
        } else {
          a = has_input(c, rv, cv) ? 1 : 0;
          b = has_input(c, cv, rv) ? 0 : -1;
        }
      } else {  // s_bot row
        a = 1;
        if (ckind == 'a') b = 0;
        else if (ckind == 'f') b = cv == rv ? 1 : 0;
        else b = has_input(c, cv, rv) ? 0 : -1;
      }
      game.set_a(static_cast<int>(i), static_cast<int>(j), a);
      game.set_b(static_cast<int>(i), static_cast<int>(j), b);
    }
  }

  out.game = std::move(game);
  out.target_role = PlayerRole::kRow;
  out.target_index = *out.row_named("s_" + vertex_name(GateKind::kAnd, c.root));
  out.semantics = "root evaluates true iff the target is strictly eliminable";
  return out;
}

GadgetOutput gadget_mcv1_to_4zstrict(const MonotoneCircuit& c) {
  require_mcv1(c);
  std::vector<int> ands = vertices_of(c, GateKind::kAnd);
  std::vector<int> ors = vertices_of(c, GateKind::kOr);
  if (ors.size() < 2)
    throw PreconditionError(
        "the four-value constant-sum gadget needs at least two OR vertices");

  GadgetOutput out;
  out.row_names.push_back("s_B");
  std::vector<std::pair<char, int>> row_src{{'B', -1}};
  for (int v : ands) {
    out.row_names.push_back("s_" + vertex_name(GateKind::kAnd, v));
    row_src.emplace_back('a', v);
  }
  for (int v : ors) {
    out.row_names.push_back("s_" + vertex_name(GateKind::kOr, v));
    row_src.emplace_back('o', v);
  }
  // Columns: t_or<j> for every OR, plus t_or<j>-x when the x-th input of
  // or<j> is an AND vertex.
  struct Col {
    int or_vertex;
    int position;  // 0 = the plain t_or column, 1/2 = input position
  };
  std::vector<Col> col_src;
  for (int v : ors) {
    out.col_names.push_back("t_" + vertex_name(GateKind::kOr, v));
    col_src.push_back({v, 0});
  }
  for (int v : ors)
    for (int x = 1; x <= 2; ++x) {
      int input = c.vertices[v].inputs[x - 1];
      if (c.vertices[input].kind == GateKind::kAnd) {
        std::ostringstream name;
        name << "t_" << vertex_name(GateKind::kOr, v) << "-" << x;
        out.col_names.push_back(name.str());
        col_src.push_back({v, x});
      }
    }

  Game game(static_cast<int>(row_src.size()), static_cast<int>(col_src.size()));
  for (std::size_t i = 0; i < row_src.size(); ++i) {
    auto [rkind, rv] = row_src[i];
    for (std::size_t j = 0; j < col_src.size(); ++j) {
      auto [orv, pos] = col_src[j];
      int value = 0;
      if (rkind == 'B') {
        value = pos == 0 ? 3 : 2;
      } else if (rkind == 'a') {
        if (pos == 0) {
          value = has_input(c, rv, orv) ? 3 : 1;
        } else {
          bool xth_input = c.vertices[orv].inputs[pos - 1] == rv;
          value = (xth_input || has_input(c, rv, orv)) ? 1 : 0;
        }
      } else {  // s_or row
        if (pos == 0) value = orv == rv ? 2 : 3;
        else value = orv == rv ? 1 : 2;
      }
      game.set_a(static_cast<int>(i), static_cast<int>(j), value);
      game.set_b(static_cast<int>(i), static_cast<int>(j), 3 - value);
    }
  }

  out.game = std::move(game);
  out.target_role = PlayerRole::kRow;
  out.target_index = *out.row_named("s_" + vertex_name(GateKind::kAnd, c.root));
  out.semantics = "root evaluates true iff the target is strictly eliminable";
  return out;
}

GadgetOutput gadget_mcv2_to_2(const MonotoneCircuit& c) {
  ValidationReport report = validate_mcv2(c);
  if (!report.ok())
    throw PreconditionError("not a restricted-form-2 circuit: " +
                            report.violations.front());
  std::vector<int> ands = vertices_of(c, GateKind::kAnd);
  std::vector<int> ors = vertices_of(c, GateKind::kOr);
  // The FALSE input of and<k>, if any; input disjointness makes it unique
  // to that AND.
  auto false_input_of = [&c](int and_vertex) {
    for (int in : c.vertices[and_vertex].inputs)
      if (c.vertices[in].kind == GateKind::kFalse) return in;
    return -1;
  };

  GadgetOutput out;
  out.row_names.push_back("s_B");
  std::vector<int> row_src{-1};
  for (int v : ands) {
    out.row_names.push_back("s_" + vertex_name(GateKind::kAnd, v));
    row_src.push_back(v);
  }
  struct Col {
    bool is_or;
    int vertex;  // the OR vertex, or the AND vertex of a t_andbot column
  };
  std::vector<Col> col_src;
  for (int v : ors) {
    out.col_names.push_back("t_" + vertex_name(GateKind::kOr, v));
    col_src.push_back({true, v});
  }
  for (int v : ands) {
    std::ostringstream name;
    name << "t_andbot" << v + 1;
    out.col_names.push_back(name.str());
    col_src.push_back({false, v});
  }

  Game game(static_cast<int>(row_src.size()), static_cast<int>(col_src.size()));
  for (std::size_t i = 0; i < row_src.size(); ++i) {
    int rv = row_src[i];
    for (std::size_t j = 0; j < col_src.size(); ++j) {
      auto [is_or, cv] = col_src[j];
      int a = 0, b = 0;
      if (rv < 0) {  // s_B
        if (is_or) {
          a = 0;
          b = 0;
        } else {
          a = false_input_of(cv) < 0 ? 1 : 0;
          b = 1;
        }
      } else {
        if (is_or) {
          a = has_input(c, rv, cv) ? 1 : 0;
          b = has_input(c, cv, rv) ? 1 : 0;
        } else {
          int bot = false_input_of(cv);
          a = bot >= 0 && has_input(c, rv, bot) ? 1 : 0;
          b = rv == cv ? 1 : 0;
        }
      }
      game.set_a(static_cast<int>(i), static_cast<int>(j), a);
      game.set_b(static_cast<int>(i), static_cast<int>(j), b);
    }
  }

  out.game = std::move(game);
  out.target_role = PlayerRole::kRow;
  out.target_index = *out.row_named("s_" + vertex_name(GateKind::kAnd, c.root));
  out.semantics =
      "root evaluates true iff the target is eliminable; identical under "
      "weak, dominance and simultaneous elimination";
  return out;
}

GadgetOutput gadget_3sat_to_3weak(const Cnf3& f) {
  std::string problem = validate_cnf3(f);
  if (!problem.empty())
    throw PreconditionError("invalid 3-cnf: " + problem);

  int clause_count = static_cast<int>(f.clauses.size());
  GadgetOutput out;
  out.row_names.push_back("s");
  for (int d = 0; d < clause_count; ++d) {
    std::ostringstream name;
    name << "s_d" << d + 1;
    out.row_names.push_back(name.str());
  }
  for (int l = 0; l < f.variable_count; ++l) {
    std::ostringstream plus, minus;
    plus << "s_x" << l + 1 << "+";
    minus << "s_x" << l + 1 << "-";
    out.row_names.push_back(plus.str());
    out.row_names.push_back(minus.str());
  }
  struct Col {
    int clause = -1;    // -1 for variable columns
    int superscript = 0;  // 1..3, or 0 for the plain t_c column
    int variable = -1;
  };
  std::vector<Col> col_src;
  for (int cidx = 0; cidx < clause_count; ++cidx) {
    for (int i = 1; i <= 3; ++i) {
      std::ostringstream name;
      name << "t_c" << cidx + 1 << "^" << i;
      out.col_names.push_back(name.str());
      col_src.push_back({cidx, i, -1});
    }
    std::ostringstream name;
    name << "t_c" << cidx + 1;
    out.col_names.push_back(name.str());
    col_src.push_back({cidx, 0, -1});
  }
  for (int k = 0; k < f.variable_count; ++k) {
    std::ostringstream name;
    name << "t_x" << k + 1;
    out.col_names.push_back(name.str());
    col_src.push_back({-1, 0, k});
  }

  // Row classification mirrors the row-name layout above.
  auto row_kind = [&](int i) -> std::tuple<char, int, bool> {
    if (i == 0) return {'s', -1, false};
    if (i <= clause_count) return {'d', i - 1, false};
    int v = (i - 1 - clause_count) / 2;
    bool positive = (i - 1 - clause_count) % 2 == 0;
    return {'l', v, positive};
  };
  // Whether literal (variable, positive) occurs in clause c, and where.
  auto literal_position = [&f](int clause, int variable, bool positive) {
    for (int p = 0; p < 3; ++p)
      if (f.clauses[clause][p] == Literal{variable, positive}) return p + 1;
    return 0;
  };

  Game game(static_cast<int>(out.row_names.size()),
            static_cast<int>(col_src.size()));
  for (int i = 0; i < game.rows(); ++i) {
    auto [kind, idx, positive] = row_kind(i);
    for (int j = 0; j < game.cols(); ++j) {
      const Col& col = col_src[j];
      int a = 0, b = 0;
      if (kind == 's') {
        a = (col.clause >= 0 && col.superscript == 0) ? 2 : 0;
        b = col.variable >= 0 ? 1 : 0;
      } else if (kind == 'd') {
        if (col.clause == idx) {
          a = 1;
          b = col.superscript == 0 ? 1 : 2;
        }
      } else {
        if (col.variable >= 0) {
          a = col.variable == idx ? 1 : 0;
          b = a;
        } else {
          int pos = literal_position(col.clause, idx, positive);
          if (col.superscript == 0)
            b = pos != 0 ? 1 : 0;
          else
            b = (pos != 0 && pos != col.superscript) ? 1 : 0;
        }
      }
      game.set_a(i, j, a);
      game.set_b(i, j, b);
    }
  }

  out.game = std::move(game);
  out.target_role = PlayerRole::kRow;
  out.target_index = 0;
  out.semantics =
      "the formula is satisfiable iff the target is weakly eliminable";
  return out;
}

Game binarize_best_response(const Game& g) {
  Game out(g.rows() + 1, g.cols() + 1);
  for (int j = 0; j < g.cols(); ++j) {
    int best = g.a(0, j);
    for (int i = 1; i < g.rows(); ++i) best = std::max(best, g.a(i, j));
    for (int i = 0; i < g.rows(); ++i)
      out.set_a(i, j, g.a(i, j) == best ? 1 : 0);
  }
  for (int i = 0; i < g.rows(); ++i) {
    int best = g.b(i, 0);
    for (int j = 1; j < g.cols(); ++j) best = std::max(best, g.b(i, j));
    for (int j = 0; j < g.cols(); ++j)
      out.set_b(i, j, g.b(i, j) == best ? 1 : 0);
  }
  // One strategy per player that is a best response everywhere.
  for (int j = 0; j <= g.cols(); ++j) out.set_a(g.rows(), j, 1);
  for (int i = 0; i <= g.rows(); ++i) out.set_b(i, g.cols(), 1);
  return out;
}

Game binarize_benchmark(const Game& g, BenchmarkPolicy policy,
                        int fixed_value) {
  auto lower_median = [](std::vector<int> values) {
    std::sort(values.begin(), values.end());
    return values[(values.size() - 1) / 2];
  };
  int bench_a = fixed_value, bench_b = fixed_value;
  if (policy == BenchmarkPolicy::kGlobalMedian) {
    std::vector<int> values;
    for (int i = 0; i < g.rows(); ++i)
      for (int j = 0; j < g.cols(); ++j) {
        values.push_back(g.a(i, j));
        values.push_back(g.b(i, j));
      }
    bench_a = bench_b = lower_median(std::move(values));
  } else if (policy == BenchmarkPolicy::kPerPlayerMedian) {
    std::vector<int> va, vb;
    for (int i = 0; i < g.rows(); ++i)
      for (int j = 0; j < g.cols(); ++j) {
        va.push_back(g.a(i, j));
        vb.push_back(g.b(i, j));
      }
    bench_a = lower_median(std::move(va));
    bench_b = lower_median(std::move(vb));
  }
  Game out(g.rows(), g.cols());
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) {
      out.set_a(i, j, g.a(i, j) > bench_a ? 1 : 0);
      out.set_b(i, j, g.b(i, j) > bench_b ? 1 : 0);
    }
  return out;
}

}  // namespace domelim

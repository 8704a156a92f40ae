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

#include "domelim/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "domelim/error.hpp"

namespace domelim {

namespace {

std::string strip_comments(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  bool in_comment = false;
  for (char ch : text) {
    if (ch == '#') in_comment = true;
    if (ch == '\n') in_comment = false;
    out.push_back(in_comment ? (ch == '\n' ? '\n' : ' ') : ch);
  }
  return out;
}

class TokenStream {
 public:
  explicit TokenStream(const std::string& text) : in_(strip_comments(text)) {}

  std::optional<std::string> next() {
    std::string token;
    if (in_ >> token) return token;
    return std::nullopt;
  }

  std::string expect(const std::string& what) {
    auto token = next();
    if (!token) throw ParseError("unexpected end of input, expected " + what);
    return *token;
  }

  void expect_keyword(const std::string& keyword) {
    std::string token = expect("'" + keyword + "'");
    if (token != keyword)
      throw ParseError("expected '" + keyword + "', got '" + token + "'");
  }

  int expect_int(const std::string& what) {
    std::string token = expect(what);
    return parse_int(token, what);
  }

  static int parse_int(const std::string& token, const std::string& what) {
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw ParseError("expected an integer for " + what + ", got '" + token +
                       "'");
    return value;
  }

  void expect_end() {
    if (auto token = next())
      throw ParseError("trailing input: '" + *token + "'");
  }

 private:
  std::istringstream in_;
};

std::vector<std::string> nonempty_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(strip_comments(text));
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream probe(line);
    std::string token;
    if (probe >> token) out.push_back(line);
  }
  return out;
}

}  // namespace

Game parse_game(const std::string& text) {
  TokenStream tokens(text);
  tokens.expect_keyword("nfg");
  int rows = tokens.expect_int("row count");
  int cols = tokens.expect_int("column count");
  if (rows < 1 || cols < 1)
    throw ParseError("game needs at least one row and one column");
  std::optional<int> constant_sum;
  // Peek: either "constant-sum <c>" or the first payoff.
  std::optional<std::string> token = tokens.next();
  if (token && *token == "constant-sum") {
    constant_sum = tokens.expect_int("constant sum");
    token = tokens.next();
  }
  Game game(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (!token) throw ParseError("unexpected end of payoff matrix");
      game.set_a(i, j, TokenStream::parse_int(*token, "payoff"));
      token = tokens.next();
    }
  if (constant_sum) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        game.set_b(i, j, *constant_sum - game.a(i, j));
  } else {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        if (!token) throw ParseError("unexpected end of payoff matrix");
        game.set_b(i, j, TokenStream::parse_int(*token, "payoff"));
        token = tokens.next();
      }
  }
  if (token) throw ParseError("trailing input: '" + *token + "'");
  return game;
}

std::string serialize_game(const Game& g) {
  std::ostringstream os;
  os << "nfg " << g.rows() << " " << g.cols() << "\n";
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = 0; j < g.cols(); ++j) os << (j ? " " : "") << g.a(i, j);
    os << "\n";
  }
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = 0; j < g.cols(); ++j) os << (j ? " " : "") << g.b(i, j);
    os << "\n";
  }
  return os.str();
}

std::string serialize_gadget(const GadgetOutput& gadget) {
  std::ostringstream os;
  os << serialize_game(gadget.game);
  for (std::size_t i = 0; i < gadget.row_names.size(); ++i)
    os << "# name " << i + 1 << " row " << gadget.row_names[i] << "\n";
  for (std::size_t j = 0; j < gadget.col_names.size(); ++j)
    os << "# name " << j + 1 << " col " << gadget.col_names[j] << "\n";
  os << "# target " << to_string(gadget.target_role) << " "
     << gadget.target_index + 1 << "\n";
  os << "# semantics " << gadget.semantics << "\n";
  return os.str();
}

std::optional<GadgetOutput> parse_gadget_sidecar(const std::string& text) {
  GadgetOutput out;
  out.game = parse_game(text);
  out.row_names.assign(out.game.rows(), "");
  out.col_names.assign(out.game.cols(), "");
  bool saw_target = false;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string hash, key;
    if (!(ls >> hash) || hash != "#" || !(ls >> key)) continue;
    if (key == "name") {
      int index;
      std::string role, label;
      if (!(ls >> index >> role >> label))
        throw ParseError("malformed name sidecar line: " + line);
      auto& names = role == "row" ? out.row_names : out.col_names;
      if (index < 1 || index > static_cast<int>(names.size()))
        throw ParseError("name sidecar index out of range: " + line);
      names[index - 1] = label;
    } else if (key == "target") {
      std::string role;
      int index;
      if (!(ls >> role >> index))
        throw ParseError("malformed target sidecar line: " + line);
      out.target_role = role == "row" ? PlayerRole::kRow : PlayerRole::kColumn;
      out.target_index = index - 1;
      saw_target = true;
    } else if (key == "semantics") {
      std::string rest;
      std::getline(ls, rest);
      if (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());
      out.semantics = rest;
    }
  }
  if (!saw_target) return std::nullopt;
  return out;
}

MonotoneCircuit parse_circuit(const std::string& text) {
  std::vector<std::string> lines = nonempty_lines(text);
  if (lines.empty()) throw ParseError("empty circuit file");
  auto parse_vertex_id = [](const std::string& token) {
    if (token.size() < 2 || token[0] != 'v')
      throw ParseError("expected a vertex id like v3, got '" + token + "'");
    return TokenStream::parse_int(token.substr(1), "vertex id");
  };

  std::istringstream header(lines[0]);
  std::string keyword;
  int count = 0;
  if (!(header >> keyword >> count) || keyword != "mcv" || count < 1)
    throw ParseError("circuit file must start with 'mcv <count>'");

  struct RawVertex {
    GateKind kind;
    std::vector<int> input_ids;
  };
  std::map<int, RawVertex> raw;
  std::optional<int> root_id;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    std::istringstream ls(lines[n]);
    std::string first;
    ls >> first;
    if (first == "root") {
      std::string idtok;
      if (!(ls >> idtok)) throw ParseError("root line without a vertex id");
      root_id = parse_vertex_id(idtok);
      std::string extra;
      if (ls >> extra) throw ParseError("trailing input on root line");
      continue;
    }
    int id = parse_vertex_id(first);
    std::string kind_token;
    if (!(ls >> kind_token))
      throw ParseError("vertex line without a label: " + lines[n]);
    RawVertex vertex;
    if (kind_token == "AND") vertex.kind = GateKind::kAnd;
    else if (kind_token == "OR") vertex.kind = GateKind::kOr;
    else if (kind_token == "FALSE") vertex.kind = GateKind::kFalse;
    else throw ParseError("unknown vertex label '" + kind_token + "'");
    std::string input;
    while (ls >> input) {
      int in_id = input[0] == 'v' ? parse_vertex_id(input)
                                  : TokenStream::parse_int(input, "input id");
      vertex.input_ids.push_back(in_id);
    }
    if (!raw.emplace(id, std::move(vertex)).second)
      throw ParseError("duplicate vertex id in circuit file");
  }
  if (static_cast<int>(raw.size()) != count)
    throw ParseError("circuit vertex count does not match the header");
  if (!root_id) throw ParseError("circuit file without a root line");

  std::map<int, int> dense;
  for (const auto& [id, vertex] : raw)
    dense.emplace(id, static_cast<int>(dense.size()));
  MonotoneCircuit out;
  out.vertices.resize(raw.size());
  for (const auto& [id, vertex] : raw) {
    MonotoneCircuit::Vertex& v = out.vertices[dense[id]];
    v.kind = vertex.kind;
    for (int in_id : vertex.input_ids) {
      auto it = dense.find(in_id);
      if (it == dense.end())
        throw ParseError("input refers to an undeclared vertex");
      v.inputs.push_back(it->second);
    }
  }
  auto root_it = dense.find(*root_id);
  if (root_it == dense.end())
    throw ParseError("root refers to an undeclared vertex");
  out.root = root_it->second;
  return out;
}

std::string serialize_circuit(const MonotoneCircuit& c) {
  std::ostringstream os;
  os << "mcv " << c.size() << "\n";
  for (int v = 0; v < c.size(); ++v) {
    os << "v" << v + 1 << " " << to_string(c.vertices[v].kind);
    for (int in : c.vertices[v].inputs) os << " " << in + 1;
    os << "\n";
  }
  os << "root v" << c.root + 1 << "\n";
  return os.str();
}

GraphFile parse_graph(const std::string& text) {
  std::vector<std::string> lines = nonempty_lines(text);
  if (lines.empty()) throw ParseError("empty graph file");
  std::istringstream header(lines[0]);
  std::string keyword;
  int n = 0;
  if (!(header >> keyword >> n) || keyword != "digraph" || n < 1)
    throw ParseError("graph file must start with 'digraph <n>'");
  GraphFile out;
  out.graph = Digraph(n);
  auto vertex = [n](int v, const std::string& what) {
    if (v < 1 || v > n)
      throw ParseError(what + " out of range (vertices are 1.." +
                       std::to_string(n) + ")");
    return v - 1;
  };
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ls(lines[i]);
    std::string kind;
    ls >> kind;
    if (kind == "edge") {
      int u, v;
      if (!(ls >> u >> v)) throw ParseError("malformed edge line: " + lines[i]);
      out.graph.add_edge(vertex(u, "edge endpoint"), vertex(v, "edge endpoint"));
    } else if (kind == "source") {
      int s;
      if (!(ls >> s)) throw ParseError("malformed source line");
      out.source = vertex(s, "source");
    } else if (kind == "target") {
      int t;
      if (!(ls >> t)) throw ParseError("malformed target line");
      out.target = vertex(t, "target");
    } else {
      throw ParseError("unknown graph line '" + kind + "'");
    }
  }
  return out;
}

std::string serialize_graph(const Digraph& g, std::optional<int> source,
                            std::optional<int> target) {
  std::ostringstream os;
  os << "digraph " << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) os << "edge " << u + 1 << " " << v + 1 << "\n";
  if (source) os << "source " << *source + 1 << "\n";
  if (target) os << "target " << *target + 1 << "\n";
  return os.str();
}

Cnf3 parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Cnf3 out;
  bool saw_header = false;
  int declared_clauses = 0;
  std::vector<int> pending;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") continue;
    if (first == "p") {
      std::string fmt;
      if (!(ls >> fmt >> out.variable_count >> declared_clauses) ||
          fmt != "cnf" || out.variable_count < 1 || declared_clauses < 0)
        throw ParseError("malformed DIMACS header");
      saw_header = true;
      continue;
    }
    if (!saw_header) throw ParseError("clause before the DIMACS header");
    pending.push_back(TokenStream::parse_int(first, "literal"));
    int lit;
    while (ls >> lit) pending.push_back(lit);
  }
  if (!saw_header) throw ParseError("missing DIMACS header");
  std::array<Literal, 3> clause;
  int filled = 0;
  for (int lit : pending) {
    if (lit == 0) {
      if (filled != 3)
        throw ParseError("clauses must have exactly three literals");
      out.clauses.push_back(clause);
      filled = 0;
      continue;
    }
    int var = std::abs(lit) - 1;
    if (var >= out.variable_count)
      throw ParseError("literal exceeds the declared variable count");
    if (filled == 3)
      throw ParseError("clauses must have exactly three literals");
    clause[filled++] = Literal{var, lit > 0};
  }
  if (filled != 0) throw ParseError("unterminated clause (missing 0)");
  if (static_cast<int>(out.clauses.size()) != declared_clauses)
    throw ParseError("clause count does not match the DIMACS header");
  return out;
}

std::string serialize_dimacs(const Cnf3& f) {
  std::ostringstream os;
  os << "p cnf " << f.variable_count << " " << f.clauses.size() << "\n";
  for (const auto& clause : f.clauses) {
    for (const Literal& l : clause)
      os << (l.positive ? l.variable + 1 : -(l.variable + 1)) << " ";
    os << "0\n";
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << content;
}

}  // namespace domelim

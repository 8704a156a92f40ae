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

#ifndef DOMELIM_IO_HPP_
#define DOMELIM_IO_HPP_

#include <optional>
#include <string>

#include "domelim/circuits.hpp"
#include "domelim/cnf.hpp"
#include "domelim/gadgets.hpp"
#include "domelim/game.hpp"
#include "domelim/graphs.hpp"

namespace domelim {

// Game text format ('#' starts a comment, tokens are whitespace-separated):
//
//   nfg <rows> <cols>                 or   nfg <rows> <cols> constant-sum <c>
//   <rows x cols integers>            (payoffs of the row player)
//   <rows x cols integers>            (column player; omitted when
//                                      constant-sum, then b = c - a)
//
// Payoffs must be integers; anything else is rejected.
Game parse_game(const std::string& text);
std::string serialize_game(const Game& g);

// Game text plus the name-map sidecar as comments:
//   # name <index> <row|col> <label>
//   # target <row|col> <index>
//   # semantics <note>
std::string serialize_gadget(const GadgetOutput& gadget);
// Reads the sidecar back; nullopt if the text carries none.
std::optional<GadgetOutput> parse_gadget_sidecar(const std::string& text);

// Circuit format:
//   mcv <count>
//   v<id> AND <ids...> | v<id> OR <id> <id> | v<id> FALSE
//   root v<id>
// Ids may be arbitrary distinct integers; they are normalized by sorted
// order. The serializer numbers vertices 1..count.
MonotoneCircuit parse_circuit(const std::string& text);
std::string serialize_circuit(const MonotoneCircuit& c);

// Graph format (vertices are 1-based in files):
//   digraph <n>
//   edge <u> <v>
//   source <s>      (optional)
//   target <t>      (optional)
struct GraphFile {
  Digraph graph{0};
  std::optional<int> source;
  std::optional<int> target;
};
GraphFile parse_graph(const std::string& text);
std::string serialize_graph(const Digraph& g,
                            std::optional<int> source = std::nullopt,
                            std::optional<int> target = std::nullopt);

// DIMACS cnf with exactly three literals per clause.
Cnf3 parse_dimacs(const std::string& text);
std::string serialize_dimacs(const Cnf3& f);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace domelim

#endif  // DOMELIM_IO_HPP_

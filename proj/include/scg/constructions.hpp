// Copyright 2026 The SCG Workbench Authors
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

// Constructive Nash equilibria for graph families where existence is
// guaranteed: trees (leaf-by-leaf induction), cycles (type-triple case
// analysis), regular bipartite graphs with shared payoffs, and instances
// with a dominant resource. Every result is checked with is_nash before it
// is returned; preconditions that fail throw InputError.

#ifndef SCG_CONSTRUCTIONS_HPP_
#define SCG_CONSTRUCTIONS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "scg/game.hpp"

namespace scg {

struct ConstructionReport {
  StrategyProfile profile;
  std::string method;
  bool verified = false;
  // Audit trail: relabelings, recursion counts, choices among several NE.
  std::vector<std::string> notes;
};

// Undirected, connected, N - 1 edges.
bool is_tree(const InterferenceGraph& graph);

// Players in cyclic order starting at 0 and continuing to its smaller
// neighbor. Throws InputError unless the graph is one undirected cycle
// through all N >= 3 players.
std::vector<PlayerId> cycle_order(const InterferenceGraph& graph);

struct Bipartition {
  std::size_t degree = 0;
  std::vector<int> side;  // 0 or 1 per player
};

// Every vertex of degree d and 2-colorable (components may be disconnected).
std::optional<Bipartition> regular_bipartition(const InterferenceGraph& graph);

ConstructionReport construct_tree_ne(const GameInstance& instance);

// Best responses of a cycle player with no, one and two characteristic
// neighbors: a = β(∅), b = β({a}), c = β({a, b}).
struct TypeTriple {
  Resource a = 0;
  Resource b = 0;
  Resource c = 0;

  bool operator==(const TypeTriple&) const = default;
};

// Indexed by player.
std::vector<TypeTriple> loop_type_triples(const GameInstance& instance);

// Walk direction and starting point used to read the cycle. Position k maps
// to cycle_order()[(offset + k) mod N], or (offset - k) when reflected.
struct LoopRelabeling {
  std::size_t offset = 0;
  bool reflected = false;
};

enum class SweepStart { kFirstChoice, kSecondChoice };

// Position 0 plays a (or b for kSecondChoice); each later position plays its
// a unless its predecessor already does, in which case it plays b. Requires
// a != b for every player.
StrategyProfile sweep_assignment(const GameInstance& instance,
                                 SweepStart start,
                                 const LoopRelabeling& relabeling = {});

ConstructionReport construct_loop_ne(const GameInstance& instance);

// Requires a d-regular bipartite undirected graph and payoffs shared by all
// players. Resources are ranked by g_r(1) internally.
ConstructionReport construct_bipartite_ne(const GameInstance& instance);

// First resource r (ascending) with g_r^i(K + 1) >= g_{r'}^i(1) for every
// player i and every other resource r', K the largest interference set.
std::optional<Resource> find_dominant_resource(const GameInstance& instance);

ConstructionReport construct_dominant_ne(const GameInstance& instance);

}  // namespace scg

#endif  // SCG_CONSTRUCTIONS_HPP_

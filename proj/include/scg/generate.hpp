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


// Seeded random instances. Output depends only on the options (the
// generator uses mt19937_64 with a portable integer draw).

#ifndef SCG_GENERATE_HPP_
#define SCG_GENERATE_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "scg/game.hpp"

namespace scg {

enum class GraphFamily { kTree, kLoop, kBipartite, kRandom };

std::string to_string(GraphFamily family);
GraphFamily parse_graph_family(std::string_view text);

struct PayoffDraw {
  // Every resource gets the same sequence per player.
  bool identical_resources = false;
  // Every player gets the same sequence per resource.
  bool non_user_specific = false;
  std::int64_t max_value = 20;
  // Entries become p/q with q drawn from [1, max_denominator].
  std::int64_t max_denominator = 1;
};

struct GeneratorOptions {
  GraphFamily family = GraphFamily::kTree;
  std::size_t players = 1;
  std::size_t resources = 2;
  std::uint64_t seed = 0;
  // Bipartite only: degree of every vertex.
  std::size_t degree = 2;
  PayoffDraw payoffs;
};

// Tree: player k attaches to a uniform earlier player. Loop: 0-1-...-N-1-0.
// Bipartite: players split into two random halves joined by `degree`
// circulant matchings. Random: a random tree plus up to N extra edges.
InterferenceGraph generate_graph(GraphFamily family, std::size_t players,
                                 std::size_t degree, std::mt19937_64& rng);

// Non-increasing sequences of length deg(i) + 1 (max degree + 1 when shared
// across players), entries in [1, max_value].
PayoffTable random_payoffs(const InterferenceGraph& graph,
                           std::size_t resources, const PayoffDraw& draw,
                           std::mt19937_64& rng);

// Throws InputError for infeasible parameters.
GameInstance generate_instance(const GeneratorOptions& options);

}  // namespace scg

#endif  // SCG_GENERATE_HPP_

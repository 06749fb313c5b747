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


#include "scg/generate.hpp"

#include <algorithm>
#include <set>

#include "scg/errors.hpp"
#include "scg/random.hpp"

namespace scg {
namespace {

PayoffTable::Sequence descending(std::size_t length, const PayoffDraw& draw,
                                 std::mt19937_64& rng) {
  PayoffTable::Sequence seq;
  for (std::size_t k = 0; k < length; ++k) {
    const std::int64_t q = uniform_int(rng, 1, draw.max_denominator);
    const std::int64_t p = uniform_int(rng, 1, draw.max_value * q);
    seq.emplace_back(p, q);
  }
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

}  // namespace

std::string to_string(GraphFamily family) {
  switch (family) {
    case GraphFamily::kTree:
      return "tree";
    case GraphFamily::kLoop:
      return "loop";
    case GraphFamily::kBipartite:
      return "bipartite";
    case GraphFamily::kRandom:
      return "random";
  }
  return "unknown";
}

GraphFamily parse_graph_family(std::string_view text) {
  for (GraphFamily f : {GraphFamily::kTree, GraphFamily::kLoop,
                        GraphFamily::kBipartite, GraphFamily::kRandom}) {
    if (to_string(f) == text) return f;
  }
  throw InputError("unknown graph family \"" + std::string(text) + "\"");
}

InterferenceGraph generate_graph(GraphFamily family, std::size_t players,
                                 std::size_t degree, std::mt19937_64& rng) {
  if (players == 0) throw InputError("need at least one player");
  std::vector<Edge> edges;
  switch (family) {
    case GraphFamily::kTree:
      for (PlayerId k = 1; k < players; ++k) {
        edges.emplace_back(uniform_index(rng, k), k);
      }
      break;
    case GraphFamily::kLoop:
      if (players < 3) throw InputError("a loop needs at least 3 players");
      for (PlayerId k = 0; k < players; ++k) {
        edges.emplace_back(k, (k + 1) % players);
      }
      break;
    case GraphFamily::kBipartite: {
      if (players % 2 != 0) {
        throw InputError("a regular bipartite graph needs an even player count");
      }
      const std::size_t half = players / 2;
      if (degree < 1 || degree > half) {
        throw InputError("degree must lie in [1, " + std::to_string(half) +
                         "] for " + std::to_string(players) + " players");
      }
      std::vector<PlayerId> perm(players);
      for (PlayerId k = 0; k < players; ++k) perm[k] = k;
      for (std::size_t k = players; k > 1; --k) {
        std::swap(perm[k - 1], perm[uniform_index(rng, k)]);
      }
      for (std::size_t k = 0; k < half; ++k) {
        for (std::size_t s = 0; s < degree; ++s) {
          edges.emplace_back(perm[k], perm[half + (k + s) % half]);
        }
      }
      break;
    }
    case GraphFamily::kRandom: {
      std::set<Edge> present;
      for (PlayerId k = 1; k < players; ++k) {
        const PlayerId parent = uniform_index(rng, k);
        edges.emplace_back(parent, k);
        present.emplace(parent, k);
      }
      if (players >= 2) {
        const std::size_t extra = uniform_index(rng, players + 1);
        for (std::size_t k = 0; k < extra; ++k) {
          PlayerId u = uniform_index(rng, players);
          PlayerId v = uniform_index(rng, players);
          if (u == v) continue;
          if (u > v) std::swap(u, v);
          if (present.emplace(u, v).second) edges.emplace_back(u, v);
        }
      }
      break;
    }
  }
  return InterferenceGraph(players, edges);
}

PayoffTable random_payoffs(const InterferenceGraph& graph,
                           std::size_t resources, const PayoffDraw& draw,
                           std::mt19937_64& rng) {
  if (resources == 0) throw InputError("need at least one resource");
  if (draw.max_value < 1 || draw.max_denominator < 1) {
    throw InputError("payoff bounds must be positive");
  }
  const std::size_t n = graph.player_count();
  std::vector<std::vector<PayoffTable::Sequence>> values(n);
  if (draw.non_user_specific) {
    const std::size_t length = graph.max_degree() + 1;
    std::vector<PayoffTable::Sequence> shared;
    for (std::size_t r = 0; r < resources; ++r) {
      if (draw.identical_resources && r > 0) {
        shared.push_back(shared.front());
      } else {
        shared.push_back(descending(length, draw, rng));
      }
    }
    for (auto& row : values) row = shared;
  } else {
    for (PlayerId i = 0; i < n; ++i) {
      const std::size_t length = graph.degree(i) + 1;
      for (std::size_t r = 0; r < resources; ++r) {
        if (draw.identical_resources && r > 0) {
          values[i].push_back(values[i].front());
        } else {
          values[i].push_back(descending(length, draw, rng));
        }
      }
    }
  }
  return PayoffTable(std::move(values), true);
}

GameInstance generate_instance(const GeneratorOptions& options) {
  std::mt19937_64 rng(options.seed);
  InterferenceGraph graph =
      generate_graph(options.family, options.players, options.degree, rng);
  PayoffTable payoffs =
      random_payoffs(graph, options.resources, options.payoffs, rng);
  return GameInstance(std::move(graph), options.resources, std::move(payoffs));
}

}  // namespace scg

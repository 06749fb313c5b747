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

#include "scg/potentials.hpp"

#include <vector>

#include "scg/equilibrium.hpp"
#include "scg/errors.hpp"

namespace scg {
namespace {

void require_classical(const GameInstance& instance) {
  if (instance.graph().directed() || !is_complete(instance.graph())) {
    throw InputError("Rosenthal potential needs a complete undirected graph");
  }
  if (!is_non_user_specific(instance)) {
    throw InputError("Rosenthal potential needs payoffs shared by all players");
  }
}

void require_identical_resources(const GameInstance& instance) {
  if (instance.graph().directed()) {
    throw InputError("edge potential needs an undirected graph");
  }
  if (!has_identical_resources(instance)) {
    throw InputError(
        "edge potential needs resource-independent payoffs per player");
  }
}

std::size_t monochromatic_edges(const GameInstance& instance,
                                const StrategyProfile& profile) {
  std::size_t count = 0;
  for (const auto& [u, v] : instance.graph().edges()) {
    if (profile[u] == profile[v]) ++count;
  }
  return count;
}

}  // namespace

Rational rosenthal_potential(const GameInstance& instance,
                             const StrategyProfile& profile) {
  require_classical(instance);
  validate_profile(instance, profile);
  std::vector<std::size_t> usage(instance.resource_count() + 1, 0);
  for (Resource r : profile) ++usage[static_cast<std::size_t>(r)];
  Rational total = 0;
  for (std::size_t r = 1; r <= instance.resource_count(); ++r) {
    for (std::size_t k = 1; k <= usage[r]; ++k) {
      total += instance.value(0, static_cast<Resource>(r), k);
    }
  }
  return total;
}

RosenthalDelta rosenthal_delta_law(const GameInstance& instance,
                                   const StrategyProfile& profile,
                                   PlayerId player, Resource new_resource) {
  require_classical(instance);
  validate_profile(instance, profile);
  validate_player(instance, player);
  validate_resource(instance, new_resource);
  const StrategyProfile moved = profile.with(player, new_resource);
  RosenthalDelta out;
  out.potential_delta = rosenthal_potential(instance, moved) -
                        rosenthal_potential(instance, profile);
  out.payoff_delta =
      payoff(instance, moved, player) - payoff(instance, profile, player);
  return out;
}

std::size_t edge_potential(const GameInstance& instance,
                           const StrategyProfile& profile) {
  require_identical_resources(instance);
  validate_profile(instance, profile);
  return monochromatic_edges(instance, profile);
}

EdgePotentialChange edge_potential_decrease(const GameInstance& instance,
                                            const StrategyProfile& profile,
                                            PlayerId player,
                                            Resource new_resource) {
  require_identical_resources(instance);
  validate_profile(instance, profile);
  validate_player(instance, player);
  validate_resource(instance, new_resource);
  const StrategyProfile moved = profile.with(player, new_resource);
  if (!(payoff(instance, moved, player) > payoff(instance, profile, player))) {
    throw InputError("move of player " + std::to_string(player) + " to " +
                     std::to_string(new_resource) +
                     " is not strictly improving");
  }
  return {monochromatic_edges(instance, profile),
          monochromatic_edges(instance, moved)};
}

}  // namespace scg

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

#ifndef SCG_POTENTIALS_HPP_
#define SCG_POTENTIALS_HPP_

#include <cstddef>

#include "scg/game.hpp"

namespace scg {

// Rosenthal's potential sum_r sum_{k=1}^{n_r} g_r(k), n_r the global count on
// r. Requires a complete undirected graph and payoffs shared by all players.
Rational rosenthal_potential(const GameInstance& instance,
                             const StrategyProfile& profile);

struct RosenthalDelta {
  Rational potential_delta;
  Rational payoff_delta;
};

// Both sides of the exact-potential identity for one unilateral move. They
// agree on every valid input; callers assert it.
RosenthalDelta rosenthal_delta_law(const GameInstance& instance,
                                   const StrategyProfile& profile,
                                   PlayerId player, Resource new_resource);

// Number of monochromatic edges. Requires an undirected graph and, per
// player, the same payoff sequence on every resource.
std::size_t edge_potential(const GameInstance& instance,
                           const StrategyProfile& profile);

struct EdgePotentialChange {
  std::size_t old_value;
  std::size_t new_value;
};

// Edge potential before and after a strictly improving move. A move that
// does not strictly improve the mover's payoff throws InputError.
EdgePotentialChange edge_potential_decrease(const GameInstance& instance,
                                            const StrategyProfile& profile,
                                            PlayerId player,
                                            Resource new_resource);

}  // namespace scg

#endif  // SCG_POTENTIALS_HPP_

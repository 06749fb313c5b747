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

// Payoff evaluation, best responses, Nash checks and the brute-force Nash
// enumeration that every constructive result is validated against.

#ifndef SCG_EQUILIBRIUM_HPP_
#define SCG_EQUILIBRIUM_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "scg/game.hpp"

namespace scg {

// n_r^i: how many of the player's interferers currently use `resource`.
std::size_t congestion(const GameInstance& instance,
                       const StrategyProfile& profile, PlayerId player,
                       Resource resource);

// g_{σ_i}^i(n_{σ_i}^i + 1).
Rational payoff(const GameInstance& instance, const StrategyProfile& profile,
                PlayerId player);

// What `player` would earn on `resource`, everyone else held fixed.
Rational deviation_payoff(const GameInstance& instance,
                          const StrategyProfile& profile, PlayerId player,
                          Resource resource);

// Tie-broken best response: the maximizer that comes first in the player's
// preference order.
Resource best_response(const GameInstance& instance,
                       const StrategyProfile& profile, PlayerId player);

// Best response when the interferers' resources form the multiset
// `neighbor_choices` (need not match the graph; used by the loop types).
Resource best_response_to(const GameInstance& instance, PlayerId player,
                          std::span<const Resource> neighbor_choices);

// Resources the player could switch to for a strictly higher payoff,
// ascending.
std::vector<Resource> improving_deviations(const GameInstance& instance,
                                           const StrategyProfile& profile,
                                           PlayerId player);

struct NashCheck {
  bool is_nash = false;
  // Every player holding a strictly improving unilateral deviation.
  std::vector<PlayerId> deviators;
  explicit operator bool() const { return is_nash; }
};

NashCheck is_nash(const GameInstance& instance, const StrategyProfile& profile);

// 10^7 unless SCG_PROFILE_CAP holds a positive integer.
std::uint64_t default_profile_cap();

// Mixed-radix indexing of all R^N profiles; index order is lexicographic
// order of profiles (player 0 most significant).
class ProfileSpace {
 public:
  // Throws ResourceLimitError when R^N exceeds `cap`.
  ProfileSpace(std::size_t players, std::size_t resources, std::uint64_t cap);

  std::uint64_t size() const { return size_; }
  std::size_t players() const { return players_; }
  std::size_t resources() const { return resources_; }

  std::uint64_t encode(const StrategyProfile& profile) const;
  StrategyProfile decode(std::uint64_t index) const;
  void decode_into(std::uint64_t index, StrategyProfile& out) const;
  // Index change when `player` moves from `from` to `to`.
  std::int64_t stride(PlayerId player) const { return strides_[player]; }

 private:
  std::size_t players_;
  std::size_t resources_;
  std::uint64_t size_ = 1;
  std::vector<std::int64_t> strides_;
};

// All pure Nash equilibria by exhaustive scan, in lexicographic order.
// The profile space is split across worker threads.
std::vector<StrategyProfile> enumerate_nash(
    const GameInstance& instance, std::uint64_t cap = default_profile_cap());

// Hot-path variants without index validation, for the exhaustive scanners.
namespace unchecked {

std::size_t congestion(const GameInstance& instance,
                       const StrategyProfile& profile, PlayerId player,
                       Resource resource);
Rational deviation_payoff(const GameInstance& instance,
                          const StrategyProfile& profile, PlayerId player,
                          Resource resource);
bool has_improvement(const GameInstance& instance,
                     const StrategyProfile& profile, PlayerId player);
Resource best_response(const GameInstance& instance,
                       const StrategyProfile& profile, PlayerId player);

}  // namespace unchecked

}  // namespace scg

#endif  // SCG_EQUILIBRIUM_HPP_

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

#include "scg/equilibrium.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <thread>

#include "scg/errors.hpp"

namespace scg {
namespace {

// Usage counts of each resource among the player's interferers, indexed by
// resource (slot 0 unused).
std::vector<std::size_t> neighbor_counts(const GameInstance& instance,
                                         const StrategyProfile& profile,
                                         PlayerId player) {
  std::vector<std::size_t> counts(instance.resource_count() + 1, 0);
  for (PlayerId j : instance.graph().interference_set(player)) {
    ++counts[static_cast<std::size_t>(profile[j])];
  }
  return counts;
}

Resource argmax_with_preference(const GameInstance& instance, PlayerId player,
                                const std::vector<std::size_t>& counts) {
  Resource best = 0;
  Rational best_value;
  for (Resource r : instance.preference(player)) {
    const Rational& v =
        instance.value(player, r, counts[static_cast<std::size_t>(r)] + 1);
    // Preference order is walked first-to-last, so only a strictly larger
    // value displaces the incumbent.
    if (best == 0 || v > best_value) {
      best = r;
      best_value = v;
    }
  }
  return best;
}

}  // namespace

namespace unchecked {

std::size_t congestion(const GameInstance& instance,
                       const StrategyProfile& profile, PlayerId player,
                       Resource resource) {
  std::size_t n = 0;
  for (PlayerId j : instance.graph().interference_set(player)) {
    if (profile[j] == resource) ++n;
  }
  return n;
}

Rational deviation_payoff(const GameInstance& instance,
                          const StrategyProfile& profile, PlayerId player,
                          Resource resource) {
  return instance.value(player, resource,
                        unchecked::congestion(instance, profile, player, resource) + 1);
}

bool has_improvement(const GameInstance& instance,
                     const StrategyProfile& profile, PlayerId player) {
  const auto counts = neighbor_counts(instance, profile, player);
  const Resource own = profile[player];
  const Rational& current =
      instance.value(player, own, counts[static_cast<std::size_t>(own)] + 1);
  for (std::size_t r = 1; r <= instance.resource_count(); ++r) {
    if (static_cast<Resource>(r) == own) continue;
    if (instance.value(player, static_cast<Resource>(r), counts[r] + 1) >
        current) {
      return true;
    }
  }
  return false;
}

Resource best_response(const GameInstance& instance,
                       const StrategyProfile& profile, PlayerId player) {
  return argmax_with_preference(instance, player,
                                neighbor_counts(instance, profile, player));
}

}  // namespace unchecked

std::size_t congestion(const GameInstance& instance,
                       const StrategyProfile& profile, PlayerId player,
                       Resource resource) {
  validate_profile(instance, profile);
  validate_player(instance, player);
  validate_resource(instance, resource);
  return unchecked::congestion(instance, profile, player, resource);
}

Rational payoff(const GameInstance& instance, const StrategyProfile& profile,
                PlayerId player) {
  validate_profile(instance, profile);
  validate_player(instance, player);
  return unchecked::deviation_payoff(instance, profile, player,
                                     profile[player]);
}

Rational deviation_payoff(const GameInstance& instance,
                          const StrategyProfile& profile, PlayerId player,
                          Resource resource) {
  validate_profile(instance, profile);
  validate_player(instance, player);
  validate_resource(instance, resource);
  return unchecked::deviation_payoff(instance, profile, player, resource);
}

Resource best_response(const GameInstance& instance,
                       const StrategyProfile& profile, PlayerId player) {
  validate_profile(instance, profile);
  validate_player(instance, player);
  return unchecked::best_response(instance, profile, player);
}

Resource best_response_to(const GameInstance& instance, PlayerId player,
                          std::span<const Resource> neighbor_choices) {
  validate_player(instance, player);
  std::vector<std::size_t> counts(instance.resource_count() + 1, 0);
  for (Resource r : neighbor_choices) {
    validate_resource(instance, r);
    ++counts[static_cast<std::size_t>(r)];
  }
  return argmax_with_preference(instance, player, counts);
}

std::vector<Resource> improving_deviations(const GameInstance& instance,
                                           const StrategyProfile& profile,
                                           PlayerId player) {
  validate_profile(instance, profile);
  validate_player(instance, player);
  const auto counts = neighbor_counts(instance, profile, player);
  const Resource own = profile[player];
  const Rational current =
      instance.value(player, own, counts[static_cast<std::size_t>(own)] + 1);
  std::vector<Resource> out;
  for (std::size_t r = 1; r <= instance.resource_count(); ++r) {
    if (static_cast<Resource>(r) == own) continue;
    if (instance.value(player, static_cast<Resource>(r), counts[r] + 1) >
        current) {
      out.push_back(static_cast<Resource>(r));
    }
  }
  return out;
}

NashCheck is_nash(const GameInstance& instance,
                  const StrategyProfile& profile) {
  validate_profile(instance, profile);
  NashCheck check;
  for (PlayerId i = 0; i < instance.player_count(); ++i) {
    if (unchecked::has_improvement(instance, profile, i)) {
      check.deviators.push_back(i);
    }
  }
  check.is_nash = check.deviators.empty();
  return check;
}

std::uint64_t default_profile_cap() {
  constexpr std::uint64_t kDefaultCap = 10'000'000;
  const char* env = std::getenv("SCG_PROFILE_CAP");
  if (env == nullptr) return kDefaultCap;
  std::uint64_t value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value == 0) return kDefaultCap;
  return value;
}

ProfileSpace::ProfileSpace(std::size_t players, std::size_t resources,
                           std::uint64_t cap)
    : players_(players), resources_(resources), strides_(players, 0) {
  if (players == 0 || resources == 0) {
    throw InputError("profile space needs players and resources");
  }
  for (std::size_t i = 0; i < players; ++i) {
    if (size_ > cap / resources) {
      throw ResourceLimitError(
          std::to_string(resources) + "^" + std::to_string(players) +
          " profiles exceed the cap of " + std::to_string(cap));
    }
    size_ *= resources;
  }
  if (size_ > cap) {
    throw ResourceLimitError(std::to_string(resources) + "^" +
                             std::to_string(players) +
                             " profiles exceed the cap of " +
                             std::to_string(cap));
  }
  std::int64_t stride = 1;
  for (std::size_t i = players; i-- > 0;) {
    strides_[i] = stride;
    stride *= static_cast<std::int64_t>(resources);
  }
}

std::uint64_t ProfileSpace::encode(const StrategyProfile& profile) const {
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < players_; ++i) {
    index = index * resources_ + static_cast<std::uint64_t>(profile[i] - 1);
  }
  return index;
}

StrategyProfile ProfileSpace::decode(std::uint64_t index) const {
  StrategyProfile out(players_, 1);
  decode_into(index, out);
  return out;
}

void ProfileSpace::decode_into(std::uint64_t index,
                               StrategyProfile& out) const {
  if (out.size() != players_) out = StrategyProfile(players_, 1);
  for (std::size_t i = players_; i-- > 0;) {
    out[i] = static_cast<Resource>(index % resources_) + 1;
    index /= resources_;
  }
}

std::vector<StrategyProfile> enumerate_nash(const GameInstance& instance,
                                            std::uint64_t cap) {
  const ProfileSpace space(instance.player_count(), instance.resource_count(),
                           cap);
  const std::uint64_t total = space.size();
  const std::uint64_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t workers =
      std::min<std::uint64_t>(hw, total / 65536 + 1);

  std::vector<std::vector<StrategyProfile>> found(workers);
  auto scan = [&](std::uint64_t w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    StrategyProfile profile(instance.player_count(), 1);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      space.decode_into(idx, profile);
      bool stable = true;
      for (PlayerId i = 0; i < instance.player_count() && stable; ++i) {
        stable = !unchecked::has_improvement(instance, profile, i);
      }
      if (stable) found[w].push_back(profile);
    }
  };

  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(scan, w);
  }

  // Worker ranges are contiguous and ascending, so concatenation is already
  // lexicographic.
  std::vector<StrategyProfile> out;
  for (auto& part : found) {
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace scg

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

#include "scg/game.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "scg/errors.hpp"

namespace scg {

InterferenceGraph::InterferenceGraph(std::size_t player_count,
                                     const std::vector<Edge>& edges,
                                     Directedness directedness)
    : directedness_(directedness), in_(player_count), out_(player_count) {
  if (player_count == 0) throw InputError("graph needs at least one player");
  for (const auto& [from, to] : edges) {
    if (from >= player_count || to >= player_count) {
      throw InputError("edge (" + std::to_string(from) + ", " +
                       std::to_string(to) + ") out of range");
    }
    if (from == to) {
      throw InputError("self-loop at player " + std::to_string(from));
    }
    if (directed()) {
      edges_.emplace_back(from, to);
    } else {
      edges_.emplace_back(std::min(from, to), std::max(from, to));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& [from, to] : edges_) {
    in_[to].push_back(from);
    out_[from].push_back(to);
    if (!directed()) {
      in_[from].push_back(to);
      out_[to].push_back(from);
    }
  }
  for (auto& list : in_) std::sort(list.begin(), list.end());
  for (auto& list : out_) std::sort(list.begin(), list.end());
}

std::span<const PlayerId> InterferenceGraph::interference_set(
    PlayerId player) const {
  return in_.at(player);
}

std::span<const PlayerId> InterferenceGraph::affected_by(
    PlayerId player) const {
  return out_.at(player);
}

std::size_t InterferenceGraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : in_) best = std::max(best, list.size());
  return best;
}

bool InterferenceGraph::interferes(PlayerId from, PlayerId to) const {
  const auto& list = in_.at(to);
  return std::binary_search(list.begin(), list.end(), from);
}

PayoffTable::PayoffTable(std::vector<std::vector<Sequence>> values,
                         bool monotone)
    : values_(std::move(values)), monotone_(monotone) {
  if (values_.empty()) throw InputError("payoff table has no players");
  const std::size_t resources = values_.front().size();
  if (resources == 0) throw InputError("payoff table has no resources");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].size() != resources) {
      throw InputError("player " + std::to_string(i) + " has " +
                       std::to_string(values_[i].size()) +
                       " payoff sequences, expected " +
                       std::to_string(resources));
    }
    for (std::size_t r = 0; r < resources; ++r) {
      const auto& seq = values_[i][r];
      if (seq.empty()) {
        throw InputError("empty payoff sequence for player " +
                         std::to_string(i) + ", resource " +
                         std::to_string(r + 1));
      }
      if (!monotone_) continue;
      for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
        if (seq[k] < seq[k + 1]) {
          throw InputError("payoff sequence for player " + std::to_string(i) +
                           ", resource " + std::to_string(r + 1) +
                           " increases at argument " + std::to_string(k + 1));
        }
      }
    }
  }
}

const PayoffTable::Sequence& PayoffTable::sequence(PlayerId player,
                                                   Resource resource) const {
  return values_.at(player).at(static_cast<std::size_t>(resource - 1));
}

const Rational& PayoffTable::value(PlayerId player, Resource resource,
                                   std::size_t n) const {
  const Sequence& seq = sequence(player, resource);
  if (n == 0) throw InputError("payoff argument must be >= 1");
  return n <= seq.size() ? seq[n - 1] : seq.back();
}

bool PayoffTable::non_increasing() const {
  for (const auto& player : values_) {
    for (const auto& seq : player) {
      if (std::adjacent_find(seq.begin(), seq.end(),
                             [](const Rational& a, const Rational& b) {
                               return a < b;
                             }) != seq.end()) {
        return false;
      }
    }
  }
  return true;
}

GameInstance::GameInstance(InterferenceGraph graph, std::size_t resource_count,
                           PayoffTable payoffs,
                           std::vector<std::vector<Resource>> preferences)
    : graph_(std::move(graph)),
      resource_count_(resource_count),
      payoffs_(std::move(payoffs)),
      preferences_(std::move(preferences)) {
  const std::size_t n = graph_.player_count();
  if (resource_count_ == 0) throw InputError("need at least one resource");
  if (payoffs_.player_count() != n) {
    throw InputError("payoff table covers " +
                     std::to_string(payoffs_.player_count()) +
                     " players, graph has " + std::to_string(n));
  }
  if (payoffs_.resource_count() != resource_count_) {
    throw InputError("payoff table covers " +
                     std::to_string(payoffs_.resource_count()) +
                     " resources, instance declares " +
                     std::to_string(resource_count_));
  }
  for (PlayerId i = 0; i < n; ++i) {
    for (std::size_t r = 1; r <= resource_count_; ++r) {
      const auto& seq = payoffs_.sequence(i, static_cast<Resource>(r));
      if (seq.size() < graph_.degree(i) + 1) {
        throw InputError("payoff sequence for player " + std::to_string(i) +
                         ", resource " + std::to_string(r) + " has " +
                         std::to_string(seq.size()) +
                         " entries, needs at least degree + 1 = " +
                         std::to_string(graph_.degree(i) + 1));
      }
    }
  }
  if (preferences_.empty()) {
    std::vector<Resource> ascending(resource_count_);
    std::iota(ascending.begin(), ascending.end(), 1);
    preferences_.assign(n, ascending);
  }
  if (preferences_.size() != n) {
    throw InputError("preferences cover " +
                     std::to_string(preferences_.size()) + " players, need " +
                     std::to_string(n));
  }
  rank_.assign(n, std::vector<std::size_t>(resource_count_, resource_count_));
  for (PlayerId i = 0; i < n; ++i) {
    const auto& order = preferences_[i];
    if (order.size() != resource_count_) {
      throw InputError("preference order of player " + std::to_string(i) +
                       " is not a permutation of the resources");
    }
    for (std::size_t k = 0; k < order.size(); ++k) {
      const Resource r = order[k];
      if (r < 1 || static_cast<std::size_t>(r) > resource_count_ ||
          rank_[i][r - 1] != resource_count_) {
        throw InputError("preference order of player " + std::to_string(i) +
                         " is not a permutation of the resources");
      }
      rank_[i][r - 1] = k;
    }
  }
}

std::span<const Resource> GameInstance::preference(PlayerId player) const {
  return preferences_.at(player);
}

std::size_t GameInstance::preference_rank(PlayerId player,
                                          Resource resource) const {
  return rank_.at(player).at(static_cast<std::size_t>(resource - 1));
}

bool GameInstance::default_preferences() const {
  for (const auto& order : preferences_) {
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (order[k] != static_cast<Resource>(k + 1)) return false;
    }
  }
  return true;
}

std::string to_string(const StrategyProfile& profile) {
  std::string out;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(profile[i]);
  }
  return out;
}

StrategyProfile parse_profile(std::string_view text) {
  std::vector<Resource> choices;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto token = text.substr(
        pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    Resource value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size() || value < 1) {
      throw InputError("invalid profile '" + std::string(text) + "'");
    }
    choices.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return StrategyProfile(std::move(choices));
}

void validate_player(const GameInstance& instance, PlayerId player) {
  if (player >= instance.player_count()) {
    throw InputError("player " + std::to_string(player) + " out of range [0, " +
                     std::to_string(instance.player_count()) + ")");
  }
}

void validate_resource(const GameInstance& instance, Resource resource) {
  if (resource < 1 ||
      static_cast<std::size_t>(resource) > instance.resource_count()) {
    throw InputError("resource " + std::to_string(resource) +
                     " out of range [1, " +
                     std::to_string(instance.resource_count()) + "]");
  }
}

void validate_profile(const GameInstance& instance,
                      const StrategyProfile& profile) {
  if (profile.size() != instance.player_count()) {
    throw InputError("profile has " + std::to_string(profile.size()) +
                     " entries, game has " +
                     std::to_string(instance.player_count()) + " players");
  }
  for (Resource r : profile) validate_resource(instance, r);
}

bool is_complete(const InterferenceGraph& graph) {
  const std::size_t n = graph.player_count();
  for (PlayerId i = 0; i < n; ++i) {
    if (graph.degree(i) != n - 1) return false;
  }
  return true;
}

namespace {

std::size_t longest_sequence(const PayoffTable& table) {
  std::size_t longest = 0;
  for (const auto& player : table.raw()) {
    for (const auto& seq : player) longest = std::max(longest, seq.size());
  }
  return longest;
}

}  // namespace

bool is_non_user_specific(const GameInstance& instance) {
  const std::size_t len = longest_sequence(instance.payoffs());
  for (std::size_t r = 1; r <= instance.resource_count(); ++r) {
    const auto res = static_cast<Resource>(r);
    for (PlayerId i = 1; i < instance.player_count(); ++i) {
      for (std::size_t k = 1; k <= len; ++k) {
        if (instance.value(i, res, k) != instance.value(0, res, k)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool has_identical_resources(const GameInstance& instance) {
  const std::size_t len = longest_sequence(instance.payoffs());
  for (PlayerId i = 0; i < instance.player_count(); ++i) {
    for (std::size_t r = 2; r <= instance.resource_count(); ++r) {
      for (std::size_t k = 1; k <= len; ++k) {
        if (instance.value(i, static_cast<Resource>(r), k) !=
            instance.value(i, 1, k)) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace scg

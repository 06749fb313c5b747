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

// Value types describing a spatial congestion game: who interferes with
// whom, what each player earns on each resource at each congestion level,
// and how ties between equally good resources are broken.
//
// Players are 0-indexed. Resources are 1-indexed.

#ifndef SCG_GAME_HPP_
#define SCG_GAME_HPP_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scg/rational.hpp"

namespace scg {

using PlayerId = std::size_t;
using Resource = int;

// An arc (i, j) means i belongs to the interference set of j.
using Edge = std::pair<PlayerId, PlayerId>;

enum class Directedness { kUndirected, kDirected };

class InterferenceGraph {
 public:
  InterferenceGraph() = default;
  // Undirected edges may be given in either orientation; duplicates merge.
  // Self-loops and out-of-range endpoints throw InputError.
  InterferenceGraph(std::size_t player_count, const std::vector<Edge>& edges,
                    Directedness directedness = Directedness::kUndirected);

  std::size_t player_count() const { return in_.size(); }
  bool directed() const { return directedness_ == Directedness::kDirected; }
  Directedness directedness() const { return directedness_; }

  // The interference set of `player`: its in-neighbors. Sorted ascending.
  std::span<const PlayerId> interference_set(PlayerId player) const;
  // Players that `player` interferes with. Sorted ascending.
  std::span<const PlayerId> affected_by(PlayerId player) const;

  std::size_t degree(PlayerId player) const {
    return interference_set(player).size();
  }
  std::size_t max_degree() const;
  bool interferes(PlayerId from, PlayerId to) const;

  // Canonical edge list: arcs sorted for directed graphs, (min, max) pairs
  // sorted for undirected ones.
  const std::vector<Edge>& edges() const { return edges_; }

  bool operator==(const InterferenceGraph&) const = default;

 private:
  Directedness directedness_ = Directedness::kUndirected;
  std::vector<Edge> edges_;
  std::vector<std::vector<PlayerId>> in_;
  std::vector<std::vector<PlayerId>> out_;
};

// g_r^i(1), g_r^i(2), ... per player and resource. Arguments past the end of
// a sequence evaluate to its last entry.
class PayoffTable {
 public:
  using Sequence = std::vector<Rational>;

  PayoffTable() = default;
  // values[player][resource - 1] is the sequence for that pair. When
  // `monotone` is set every sequence must be non-increasing.
  PayoffTable(std::vector<std::vector<Sequence>> values, bool monotone);

  std::size_t player_count() const { return values_.size(); }
  std::size_t resource_count() const {
    return values_.empty() ? 0 : values_.front().size();
  }
  const Sequence& sequence(PlayerId player, Resource resource) const;
  // g_r^i(n) for n >= 1.
  const Rational& value(PlayerId player, Resource resource,
                        std::size_t n) const;

  bool monotone_asserted() const { return monotone_; }
  // Whether the data is non-increasing, regardless of the flag.
  bool non_increasing() const;

  const std::vector<std::vector<Sequence>>& raw() const { return values_; }

  bool operator==(const PayoffTable&) const = default;

 private:
  std::vector<std::vector<Sequence>> values_;
  bool monotone_ = false;
};

class GameInstance {
 public:
  GameInstance() = default;
  // Empty `preferences` means ascending resource index for every player.
  GameInstance(InterferenceGraph graph, std::size_t resource_count,
               PayoffTable payoffs,
               std::vector<std::vector<Resource>> preferences = {});

  const InterferenceGraph& graph() const { return graph_; }
  const PayoffTable& payoffs() const { return payoffs_; }
  std::size_t player_count() const { return graph_.player_count(); }
  std::size_t resource_count() const { return resource_count_; }

  // Most preferred first.
  std::span<const Resource> preference(PlayerId player) const;
  // 0 for the most preferred resource.
  std::size_t preference_rank(PlayerId player, Resource resource) const;
  bool default_preferences() const;

  const Rational& value(PlayerId player, Resource resource,
                        std::size_t n) const {
    return payoffs_.value(player, resource, n);
  }

  bool operator==(const GameInstance&) const = default;

 private:
  InterferenceGraph graph_;
  std::size_t resource_count_ = 0;
  PayoffTable payoffs_;
  std::vector<std::vector<Resource>> preferences_;
  std::vector<std::vector<std::size_t>> rank_;
};

class StrategyProfile {
 public:
  StrategyProfile() = default;
  explicit StrategyProfile(std::vector<Resource> choices)
      : choices_(std::move(choices)) {}
  explicit StrategyProfile(std::initializer_list<Resource> choices)
      : choices_(choices) {}
  StrategyProfile(std::size_t players, Resource fill)
      : choices_(players, fill) {}

  std::size_t size() const { return choices_.size(); }
  Resource operator[](PlayerId player) const { return choices_[player]; }
  Resource& operator[](PlayerId player) { return choices_[player]; }
  const std::vector<Resource>& choices() const { return choices_; }
  auto begin() const { return choices_.begin(); }
  auto end() const { return choices_.end(); }

  StrategyProfile with(PlayerId player, Resource resource) const {
    StrategyProfile copy = *this;
    copy.choices_[player] = resource;
    return copy;
  }

  auto operator<=>(const StrategyProfile&) const = default;

 private:
  std::vector<Resource> choices_;
};

// Comma-separated, 1-indexed: "1,2,1".
std::string to_string(const StrategyProfile& profile);
StrategyProfile parse_profile(std::string_view text);

// Throws InputError unless the profile has one valid resource per player.
void validate_profile(const GameInstance& instance,
                      const StrategyProfile& profile);
void validate_player(const GameInstance& instance, PlayerId player);
void validate_resource(const GameInstance& instance, Resource resource);

// Structural predicates shared by the family-specific operations.
bool is_complete(const InterferenceGraph& graph);
// g_r^i = g_r for every player, compared on every argument a player can see.
bool is_non_user_specific(const GameInstance& instance);
// g_r^i = g^i for every resource, per player.
bool has_identical_resources(const GameInstance& instance);

}  // namespace scg

#endif  // SCG_GAME_HPP_

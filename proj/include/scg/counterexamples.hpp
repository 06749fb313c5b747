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


// Built-in instances without the nice properties: a three-color improvement
// loop, an undirected game with non-monotonic payoffs and no pure NE, and a
// directed game with no pure NE. Each builder re-derives the parts of its
// instance that are not stated outright (topologies) and checks the
// derivation before returning.

#ifndef SCG_COUNTEREXAMPLES_HPP_
#define SCG_COUNTEREXAMPLES_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scg/dynamics.hpp"
#include "scg/game.hpp"

namespace scg {

enum class CounterexampleName { kThreeColorCycle, kNonMonotonic, kDirectedNoNash };

// "three-color", "non-monotonic", "directed".
std::string to_string(CounterexampleName name);
// Accepts the names above and their snake_case forms.
std::optional<CounterexampleName> parse_counterexample_name(
    std::string_view text);

struct CanonicalInstance {
  CounterexampleName name = CounterexampleName::kThreeColorCycle;
  GameInstance instance;
  // Improvement loop expected to be valid (three-color only).
  StrategyProfile loop_start;
  std::vector<ScheduledMove> loop_schedule;
  bool expect_no_nash = false;
  // How the topology was derived; one line per fact.
  std::vector<std::string> certificate;
};

// Core players A, B, C, D are 0..3; colors r, p, b are resources 1, 2, 3.
// Each core player has `group_sizes[k]` private auxiliary neighbors per
// color, whose own color strictly dominates. Extra resources (beyond 3) pay
// 0 to everyone. Throws BuildError if the derivation does not check out.
CanonicalInstance build_three_color_cycle(std::size_t resource_count = 3);

// Shared g_1 = (2, 5, 3), g_2 = (4, 6, 1) on the path 0 - 2 - 1.
CanonicalInstance build_non_monotonic();

// Shared g_1 = (8, 7, 5, 3), g_2 = (11, 10, 6, 4), g_3 = (12, 9, 2, 1) on
// the first directed 4-node graph (by arc count, then arc mask) with no
// pure NE.
CanonicalInstance build_directed_no_ne();

CanonicalInstance build_counterexample(CounterexampleName name);

// The cells of the three-player two-resource game matrix in row order
// (player 2's resource, then players 0 and 1 lexicographically).
struct MatrixCell {
  StrategyProfile profile;
  std::array<std::int64_t, 3> payoffs;
};
const std::vector<MatrixCell>& non_monotonic_matrix();

// Values along a strictly descending chain of payoff entries.
struct ChainEntry {
  Resource resource;
  std::size_t argument;
};
const std::vector<ChainEntry>& three_color_chain();
const std::vector<ChainEntry>& directed_chain();
// Count of chain positions where the instance's shared payoffs (player 0's
// table) fail strict descent; 0 means the chain holds.
std::size_t chain_violations(const GameInstance& instance,
                             const std::vector<ChainEntry>& chain);

struct CounterexampleReport {
  bool pass = false;
  std::string summary;
  std::vector<std::string> diagnostics;
  std::size_t verified_steps = 0;
  std::uint64_t profiles_checked = 0;
  std::size_t nash_count = 0;
};

// Replays the loop with strict improvement checks, or scans every profile
// for pure NE, and reports pass or fail with diagnostics.
CounterexampleReport verify_counterexample(const CanonicalInstance& c);

}  // namespace scg

#endif  // SCG_COUNTEREXAMPLES_HPP_

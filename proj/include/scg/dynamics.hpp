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

// Asynchronous improvement dynamics, exhaustive finite-improvement checks
// over the improvement digraph, and the two-resource trace diagnostics
// (reverse-change pair classification and pairwise loop audit).

#ifndef SCG_DYNAMICS_HPP_
#define SCG_DYNAMICS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scg/equilibrium.hpp"
#include "scg/game.hpp"

namespace scg {

enum class Mode { kBetterResponse, kBestResponse };
enum class SchedulerKind { kRoundRobin, kRandom, kExplicit };
enum class TerminalStatus { kConvergedToNash, kStepLimit, kCycleDetected };

std::string to_string(Mode mode);
std::string to_string(SchedulerKind kind);
std::string to_string(TerminalStatus status);

struct ImprovementStep {
  std::size_t time = 0;  // 1-based
  PlayerId mover = 0;
  Resource from = 0;
  Resource to = 0;
  Rational payoff_before;
  Rational payoff_after;

  bool operator==(const ImprovementStep&) const = default;
};

struct ImprovementTrace {
  StrategyProfile initial;
  std::vector<ImprovementStep> steps;

  // State right before step t (t in [1, T + 1]; T + 1 gives the final state).
  StrategyProfile state_before(std::size_t t) const;
  StrategyProfile final_state() const;
  bool closed() const { return final_state() == initial; }

  bool operator==(const ImprovementTrace&) const = default;
};

// One scheduled move. Without a target the mover picks per the run's mode.
struct ScheduledMove {
  PlayerId player = 0;
  std::optional<Resource> target;
};

struct DynamicsOptions {
  SchedulerKind scheduler = SchedulerKind::kRoundRobin;
  Mode mode = Mode::kBetterResponse;
  std::uint64_t seed = 0;
  std::size_t max_steps = 10'000;
  std::vector<ScheduledMove> schedule;  // kExplicit only
};

struct DynamicsResult {
  ImprovementTrace trace;
  TerminalStatus status = TerminalStatus::kStepLimit;
  // Steps between the two visits of the recurring profile.
  std::optional<std::size_t> cycle_period;
};

// Runs strictly improving unilateral moves until no player can improve,
// `max_steps` moves were made, or a profile recurs. An explicit schedule
// naming a non-improving target throws InputError; entries without a
// target are skipped when their player cannot improve. An exhausted
// schedule ends the run like a step limit unless the profile is a Nash
// equilibrium.
DynamicsResult run_dynamics(const GameInstance& instance,
                            const StrategyProfile& start,
                            const DynamicsOptions& options);

// Builds a trace from moves without requiring improvement; payoffs are
// recorded as they occur. Diagnostic loops are built this way.
ImprovementTrace trace_from_moves(const GameInstance& instance,
                                  const StrategyProfile& start,
                                  const std::vector<ScheduledMove>& moves);

// Replays a trace: recorded from/payoffs must match and, when
// `require_improvement`, every step must strictly improve its mover.
// Returns an empty string on success, otherwise the first violation.
std::string check_trace(const GameInstance& instance,
                        const ImprovementTrace& trace,
                        bool require_improvement = true);

// Restricts an exhaustive scan to `free_players`; every other player is held
// at its entry in `base`.
struct ScanScope {
  std::vector<PlayerId> free_players;
  StrategyProfile base;
};

struct FipVerdict {
  bool acyclic = true;
  // Closed improvement loop; present iff !acyclic.
  std::optional<ImprovementTrace> witness_cycle;
  std::uint64_t states_explored = 0;
  std::uint64_t improvement_edges = 0;
};

// Builds the improvement digraph over all profiles (an edge per strictly
// improving unilateral deviation, or per strictly improving tie-broken best
// response) and tests it for directed cycles. The witness is the shortest
// cycle found by breadth-first search inside the strongly connected
// components; ties go to the lexicographically smallest start.
FipVerdict fip_scan(const GameInstance& instance, Mode mode,
                    std::uint64_t cap = default_profile_cap(),
                    const std::optional<ScanScope>& scope = std::nullopt);

struct ReverseChangeSets {
  std::size_t ss = 0;
  std::size_t oo = 0;
  std::size_t so = 0;
  std::size_t os = 0;

  bool operator==(const ReverseChangeSets&) const = default;
};

// Classifies the player's neighbors by color relative to the player right
// before its changes at times t and t_prime (s -> s' at t, s' -> s at
// t_prime, t < t_prime). Two resources, undirected graph.
ReverseChangeSets reverse_change_sets(const GameInstance& instance,
                                      const ImprovementTrace& trace,
                                      PlayerId player, std::size_t t,
                                      std::size_t t_prime);

// Same classification without order or improvement requirements. In a
// closed loop t_prime may precede t (wrap-around pair).
ReverseChangeSets classify_neighbors(const GameInstance& instance,
                                     const ImprovementTrace& trace,
                                     PlayerId player, std::size_t t,
                                     std::size_t t_prime);

// Every pair of consecutive changes by the same player. For closed traces
// the last change pairs with the first.
struct ChangePair {
  PlayerId player;
  std::size_t t;
  std::size_t t_prime;
};
std::vector<ChangePair> reverse_change_pairs(const ImprovementTrace& trace,
                                             bool wrap_around);

struct PairAudit {
  std::size_t lhs_count = 0;  // appearances in each other's SS sets
  std::size_t rhs_count = 0;  // appearances in each other's OO sets
  std::size_t inequalities = 0;  // pairs where the other player appears
};

// Over all cyclic reverse-change pairs of a and b in a closed two-resource
// loop, counts how often each appears in the other's SS and OO sets.
PairAudit pair_loop_audit(const GameInstance& instance,
                       const ImprovementTrace& loop, PlayerId player_a,
                       PlayerId player_b);

}  // namespace scg

#endif  // SCG_DYNAMICS_HPP_

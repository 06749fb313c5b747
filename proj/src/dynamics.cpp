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

#include "scg/dynamics.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <random>
#include <unordered_map>

#include "scg/errors.hpp"
#include "scg/random.hpp"

namespace scg {

std::string to_string(Mode mode) {
  return mode == Mode::kBetterResponse ? "better" : "best";
}

std::string to_string(SchedulerKind kind) {
  switch (kind) {
    case SchedulerKind::kRoundRobin:
      return "round-robin";
    case SchedulerKind::kRandom:
      return "random";
    case SchedulerKind::kExplicit:
      return "file";
  }
  return "unknown";
}

std::string to_string(TerminalStatus status) {
  switch (status) {
    case TerminalStatus::kConvergedToNash:
      return "converged_to_ne";
    case TerminalStatus::kStepLimit:
      return "step_limit";
    case TerminalStatus::kCycleDetected:
      return "cycle_detected";
  }
  return "unknown";
}

StrategyProfile ImprovementTrace::state_before(std::size_t t) const {
  if (t == 0 || t > steps.size() + 1) {
    throw InputError("time " + std::to_string(t) + " outside trace of " +
                     std::to_string(steps.size()) + " steps");
  }
  StrategyProfile state = initial;
  for (std::size_t k = 0; k + 1 < t; ++k) state[steps[k].mover] = steps[k].to;
  return state;
}

StrategyProfile ImprovementTrace::final_state() const {
  return state_before(steps.size() + 1);
}

namespace {

Resource choose_target(const GameInstance& instance,
                       const StrategyProfile& profile, PlayerId player,
                       Mode mode, std::mt19937_64& rng) {
  if (mode == Mode::kBestResponse) {
    return unchecked::best_response(instance, profile, player);
  }
  const auto options = improving_deviations(instance, profile, player);
  return options[uniform_index(rng, options.size())];
}

ImprovementStep make_step(const GameInstance& instance,
                          const StrategyProfile& profile, std::size_t time,
                          PlayerId mover, Resource to) {
  ImprovementStep step;
  step.time = time;
  step.mover = mover;
  step.from = profile[mover];
  step.to = to;
  step.payoff_before =
      unchecked::deviation_payoff(instance, profile, mover, step.from);
  step.payoff_after = unchecked::deviation_payoff(instance, profile, mover, to);
  return step;
}

}  // namespace

DynamicsResult run_dynamics(const GameInstance& instance,
                            const StrategyProfile& start,
                            const DynamicsOptions& options) {
  validate_profile(instance, start);
  const std::size_t n = instance.player_count();
  std::mt19937_64 rng(options.seed);

  DynamicsResult result;
  result.trace.initial = start;
  StrategyProfile current = start;
  std::map<StrategyProfile, std::size_t> visited{{current, 0}};
  std::size_t round_robin_next = 0;
  std::size_t schedule_pos = 0;

  auto settle = [&] {
    result.status = is_nash(instance, current).is_nash
                        ? TerminalStatus::kConvergedToNash
                        : TerminalStatus::kStepLimit;
  };

  while (true) {
    if (result.trace.steps.size() >= options.max_steps) {
      settle();
      break;
    }

    std::optional<PlayerId> mover;
    Resource target = 0;
    switch (options.scheduler) {
      case SchedulerKind::kRoundRobin: {
        for (std::size_t k = 0; k < n; ++k) {
          const PlayerId p = (round_robin_next + k) % n;
          if (unchecked::has_improvement(instance, current, p)) {
            mover = p;
            break;
          }
        }
        if (mover) {
          target = choose_target(instance, current, *mover, options.mode, rng);
          round_robin_next = (*mover + 1) % n;
        }
        break;
      }
      case SchedulerKind::kRandom: {
        std::vector<PlayerId> candidates;
        for (PlayerId p = 0; p < n; ++p) {
          if (unchecked::has_improvement(instance, current, p)) {
            candidates.push_back(p);
          }
        }
        if (!candidates.empty()) {
          mover = candidates[uniform_index(rng, candidates.size())];
          target = choose_target(instance, current, *mover, options.mode, rng);
        }
        break;
      }
      case SchedulerKind::kExplicit: {
        while (!mover && schedule_pos < options.schedule.size()) {
          const ScheduledMove& entry = options.schedule[schedule_pos++];
          validate_player(instance, entry.player);
          if (entry.target) {
            validate_resource(instance, *entry.target);
            const Rational before = unchecked::deviation_payoff(
                instance, current, entry.player, current[entry.player]);
            const Rational after = unchecked::deviation_payoff(
                instance, current, entry.player, *entry.target);
            if (!(after > before)) {
              throw InputError(
                  "scheduled move " + std::to_string(schedule_pos) +
                  " (player " + std::to_string(entry.player) + " to " +
                  std::to_string(*entry.target) +
                  ") is not strictly improving");
            }
            mover = entry.player;
            target = *entry.target;
          } else if (unchecked::has_improvement(instance, current,
                                                entry.player)) {
            mover = entry.player;
            target = choose_target(instance, current, entry.player,
                                   options.mode, rng);
          }
        }
        break;
      }
    }

    if (!mover) {
      settle();
      break;
    }

    const std::size_t time = result.trace.steps.size() + 1;
    result.trace.steps.push_back(
        make_step(instance, current, time, *mover, target));
    current[*mover] = target;

    auto [it, inserted] = visited.emplace(current, time);
    if (!inserted) {
      result.status = TerminalStatus::kCycleDetected;
      result.cycle_period = time - it->second;
      break;
    }
  }
  return result;
}

ImprovementTrace trace_from_moves(const GameInstance& instance,
                                  const StrategyProfile& start,
                                  const std::vector<ScheduledMove>& moves) {
  validate_profile(instance, start);
  ImprovementTrace trace;
  trace.initial = start;
  StrategyProfile current = start;
  for (const ScheduledMove& move : moves) {
    validate_player(instance, move.player);
    Resource to = 0;
    if (move.target) {
      to = *move.target;
      validate_resource(instance, to);
    } else if (instance.resource_count() == 2) {
      to = current[move.player] == 1 ? 2 : 1;
    } else {
      throw InputError("untargeted move needs exactly two resources");
    }
    trace.steps.push_back(
        make_step(instance, current, trace.steps.size() + 1, move.player, to));
    current[move.player] = to;
  }
  return trace;
}

std::string check_trace(const GameInstance& instance,
                        const ImprovementTrace& trace,
                        bool require_improvement) {
  try {
    validate_profile(instance, trace.initial);
  } catch (const InputError& e) {
    return e.what();
  }
  StrategyProfile current = trace.initial;
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const ImprovementStep& step = trace.steps[k];
    const std::string where = "step " + std::to_string(k + 1);
    if (step.time != k + 1) return where + ": time index out of sequence";
    if (step.mover >= instance.player_count()) {
      return where + ": mover out of range";
    }
    if (step.to < 1 ||
        static_cast<std::size_t>(step.to) > instance.resource_count()) {
      return where + ": target out of range";
    }
    if (current[step.mover] != step.from) {
      return where + ": mover is not on the recorded source resource";
    }
    const Rational before =
        unchecked::deviation_payoff(instance, current, step.mover, step.from);
    const Rational after =
        unchecked::deviation_payoff(instance, current, step.mover, step.to);
    if (before != step.payoff_before || after != step.payoff_after) {
      return where + ": recorded payoffs do not match replay";
    }
    if (require_improvement && !(after > before)) {
      return where + ": move is not strictly improving";
    }
    current[step.mover] = step.to;
  }
  return {};
}

namespace {

// Implicit improvement digraph over the profiles of the scanned players.
class ImprovementGraph {
 public:
  ImprovementGraph(const GameInstance& instance, Mode mode, std::uint64_t cap,
                   const std::optional<ScanScope>& scope)
      : instance_(instance),
        mode_(mode),
        free_(scope ? scope->free_players : all_players(instance)),
        space_(free_.size(), instance.resource_count(), cap),
        scratch_(scope ? scope->base
                       : StrategyProfile(instance.player_count(), 1)) {
    if (scope) {
      validate_profile(instance, scope->base);
      std::vector<bool> seen(instance.player_count(), false);
      for (PlayerId p : free_) {
        validate_player(instance, p);
        if (seen[p]) throw InputError("duplicate free player");
        seen[p] = true;
      }
    }
  }

  std::uint64_t size() const { return space_.size(); }

  StrategyProfile profile(std::uint64_t index) {
    load(index);
    return scratch_;
  }

  void successors(std::uint64_t index, std::vector<std::uint64_t>& out) {
    out.clear();
    load(index);
    for (std::size_t k = 0; k < free_.size(); ++k) {
      const PlayerId p = free_[k];
      const Resource own = scratch_[p];
      const Rational current =
          unchecked::deviation_payoff(instance_, scratch_, p, own);
      auto push = [&](Resource r) {
        out.push_back(static_cast<std::uint64_t>(
            static_cast<std::int64_t>(index) +
            (r - own) * space_.stride(k)));
      };
      if (mode_ == Mode::kBestResponse) {
        const Resource br = unchecked::best_response(instance_, scratch_, p);
        if (br != own &&
            unchecked::deviation_payoff(instance_, scratch_, p, br) > current) {
          push(br);
        }
        continue;
      }
      for (std::size_t r = 1; r <= instance_.resource_count(); ++r) {
        const auto res = static_cast<Resource>(r);
        if (res == own) continue;
        if (unchecked::deviation_payoff(instance_, scratch_, p, res) >
            current) {
          push(res);
        }
      }
    }
  }

 private:
  static std::vector<PlayerId> all_players(const GameInstance& instance) {
    std::vector<PlayerId> out(instance.player_count());
    for (PlayerId p = 0; p < out.size(); ++p) out[p] = p;
    return out;
  }

  void load(std::uint64_t index) {
    for (std::size_t k = free_.size(); k-- > 0;) {
      scratch_[free_[k]] =
          static_cast<Resource>(index % instance_.resource_count()) + 1;
      index /= instance_.resource_count();
    }
  }

  const GameInstance& instance_;
  Mode mode_;
  std::vector<PlayerId> free_;
  ProfileSpace space_;
  StrategyProfile scratch_;
};

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

}  // namespace

FipVerdict fip_scan(const GameInstance& instance, Mode mode, std::uint64_t cap,
                    const std::optional<ScanScope>& scope) {
  cap = std::min<std::uint64_t>(cap, kUnvisited - 1);
  ImprovementGraph graph(instance, mode, cap, scope);
  const std::uint64_t total = graph.size();

  FipVerdict verdict;
  verdict.states_explored = total;

  // Iterative Tarjan. After a node's component is popped, `low` holds the
  // component id.
  std::vector<std::uint32_t> order(total, kUnvisited);
  std::vector<std::uint32_t> low(total, 0);
  std::vector<bool> on_stack(total, false);
  std::vector<std::uint64_t> stack;
  std::vector<std::vector<std::uint64_t>> cyclic_components;
  std::vector<std::uint32_t> component_of_cyclic;

  struct Frame {
    std::uint64_t node;
    std::vector<std::uint64_t> succ;
    std::size_t next = 0;
  };
  std::vector<Frame> frames;
  std::uint32_t counter = 0;
  std::uint32_t component_counter = 0;

  for (std::uint64_t root = 0; root < total; ++root) {
    if (order[root] != kUnvisited) continue;
    auto open = [&](std::uint64_t v) {
      order[v] = low[v] = counter++;
      stack.push_back(v);
      on_stack[v] = true;
      Frame frame{v, {}, 0};
      graph.successors(v, frame.succ);
      verdict.improvement_edges += frame.succ.size();
      frames.push_back(std::move(frame));
    };
    open(root);
    while (!frames.empty()) {
      Frame& top = frames.back();
      if (top.next < top.succ.size()) {
        const std::uint64_t w = top.succ[top.next++];
        if (order[w] == kUnvisited) {
          open(w);
        } else if (on_stack[w]) {
          low[top.node] = std::min(low[top.node], order[w]);
        }
        continue;
      }
      const std::uint64_t v = top.node;
      frames.pop_back();
      if (!frames.empty()) {
        const std::uint64_t parent = frames.back().node;
        low[parent] = std::min(low[parent], low[v]);
      }
      if (low[v] != order[v]) continue;
      std::vector<std::uint64_t> members;
      while (true) {
        const std::uint64_t w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        members.push_back(w);
        if (w == v) break;
      }
      const std::uint32_t id = component_counter++;
      for (std::uint64_t w : members) low[w] = id;
      if (members.size() > 1) {
        std::sort(members.begin(), members.end());
        cyclic_components.push_back(std::move(members));
        component_of_cyclic.push_back(id);
      }
    }
  }

  if (cyclic_components.empty()) return verdict;
  verdict.acyclic = false;

  // Shortest cycle through each candidate start, by BFS confined to the
  // start's component.
  constexpr std::size_t kFullSearchLimit = 4096;
  std::vector<std::uint64_t> best_cycle;
  std::vector<std::uint64_t> succ;
  for (std::size_t c = 0; c < cyclic_components.size(); ++c) {
    const auto& members = cyclic_components[c];
    const std::uint32_t id = component_of_cyclic[c];
    const std::size_t starts =
        members.size() <= kFullSearchLimit ? members.size() : 1;
    for (std::size_t s = 0; s < starts; ++s) {
      const std::uint64_t source = members[s];
      std::unordered_map<std::uint64_t, std::uint64_t> parent;
      std::unordered_map<std::uint64_t, std::size_t> dist;
      std::queue<std::uint64_t> frontier;
      frontier.push(source);
      dist[source] = 0;
      std::optional<std::uint64_t> closing;
      while (!frontier.empty() && !closing) {
        const std::uint64_t u = frontier.front();
        frontier.pop();
        if (!best_cycle.empty() && dist[u] + 1 >= best_cycle.size()) break;
        graph.successors(u, succ);
        for (std::uint64_t w : succ) {
          if (low[w] != id) continue;
          if (w == source) {
            closing = u;
            break;
          }
          if (dist.count(w)) continue;
          dist[w] = dist[u] + 1;
          parent[w] = u;
          frontier.push(w);
        }
      }
      if (!closing) continue;
      std::vector<std::uint64_t> cycle;
      for (std::uint64_t u = *closing; u != source; u = parent[u]) {
        cycle.push_back(u);
      }
      cycle.push_back(source);
      std::reverse(cycle.begin(), cycle.end());
      if (best_cycle.empty() || cycle.size() < best_cycle.size() ||
          (cycle.size() == best_cycle.size() && cycle < best_cycle)) {
        best_cycle = std::move(cycle);
      }
    }
  }

  ImprovementTrace witness;
  witness.initial = graph.profile(best_cycle.front());
  StrategyProfile current = witness.initial;
  for (std::size_t k = 0; k < best_cycle.size(); ++k) {
    const StrategyProfile next =
        graph.profile(best_cycle[(k + 1) % best_cycle.size()]);
    PlayerId mover = 0;
    while (current[mover] == next[mover]) ++mover;
    witness.steps.push_back(
        make_step(instance, current, k + 1, mover, next[mover]));
    current = next;
  }
  verdict.witness_cycle = std::move(witness);
  return verdict;
}

namespace {

void require_two_resource_undirected(const GameInstance& instance) {
  if (instance.resource_count() != 2) {
    throw InputError("reverse-change analysis needs exactly two resources");
  }
  if (instance.graph().directed()) {
    throw InputError("reverse-change analysis needs an undirected graph");
  }
}

}  // namespace

ReverseChangeSets classify_neighbors(const GameInstance& instance,
                                     const ImprovementTrace& trace,
                                     PlayerId player, std::size_t t,
                                     std::size_t t_prime) {
  validate_player(instance, player);
  const StrategyProfile first = trace.state_before(t);
  const StrategyProfile second = trace.state_before(t_prime);
  ReverseChangeSets sets;
  for (PlayerId j : instance.graph().interference_set(player)) {
    const bool same_first = first[j] == first[player];
    const bool same_second = second[j] == second[player];
    if (same_first && same_second) {
      ++sets.ss;
    } else if (!same_first && !same_second) {
      ++sets.oo;
    } else if (same_first) {
      ++sets.so;
    } else {
      ++sets.os;
    }
  }
  return sets;
}

ReverseChangeSets reverse_change_sets(const GameInstance& instance,
                                      const ImprovementTrace& trace,
                                      PlayerId player, std::size_t t,
                                      std::size_t t_prime) {
  require_two_resource_undirected(instance);
  validate_player(instance, player);
  const std::size_t T = trace.steps.size();
  if (t == 0 || t >= t_prime || t_prime > T) {
    throw InputError("need 1 <= t < t' <= " + std::to_string(T));
  }
  const ImprovementStep& first = trace.steps[t - 1];
  const ImprovementStep& second = trace.steps[t_prime - 1];
  if (first.mover != player || second.mover != player) {
    throw InputError("player " + std::to_string(player) +
                     " does not move at both times");
  }
  if (first.from != second.to || first.to != second.from) {
    throw InputError("the two changes are not reverses of each other");
  }
  return classify_neighbors(instance, trace, player, t, t_prime);
}

std::vector<ChangePair> reverse_change_pairs(const ImprovementTrace& trace,
                                             bool wrap_around) {
  std::map<PlayerId, std::vector<std::size_t>> times;
  for (const ImprovementStep& step : trace.steps) {
    times[step.mover].push_back(step.time);
  }
  std::vector<ChangePair> pairs;
  for (const auto& [player, list] : times) {
    for (std::size_t k = 0; k + 1 < list.size(); ++k) {
      pairs.push_back({player, list[k], list[k + 1]});
    }
    if (wrap_around && list.size() >= 2) {
      pairs.push_back({player, list.back(), list.front()});
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const ChangePair& a, const ChangePair& b) { return a.t < b.t; });
  return pairs;
}

PairAudit pair_loop_audit(const GameInstance& instance,
                          const ImprovementTrace& loop, PlayerId player_a,
                          PlayerId player_b) {
  require_two_resource_undirected(instance);
  validate_player(instance, player_a);
  validate_player(instance, player_b);
  validate_profile(instance, loop.initial);
  if (!loop.closed()) {
    throw InputError("pair audit needs a closed loop");
  }
  PairAudit audit;
  if (player_a == player_b ||
      !instance.graph().interferes(player_a, player_b)) {
    return audit;
  }
  for (const ChangePair& pair : reverse_change_pairs(loop, true)) {
    if (pair.player != player_a && pair.player != player_b) continue;
    const PlayerId other = pair.player == player_a ? player_b : player_a;
    const StrategyProfile first = loop.state_before(pair.t);
    const StrategyProfile second = loop.state_before(pair.t_prime);
    const bool same_first = first[other] == first[pair.player];
    const bool same_second = second[other] == second[pair.player];
    if (same_first && same_second) {
      ++audit.lhs_count;
      ++audit.inequalities;
    } else if (!same_first && !same_second) {
      ++audit.rhs_count;
      ++audit.inequalities;
    }
  }
  return audit;
}

}  // namespace scg

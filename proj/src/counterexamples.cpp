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


#include "scg/counterexamples.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "scg/equilibrium.hpp"
#include "scg/errors.hpp"

namespace scg {
namespace {

constexpr PlayerId kA = 0, kB = 1, kC = 2, kD = 3;
constexpr Resource kRed = 1, kPurple = 2, kBlue = 3;
constexpr std::array<std::size_t, 4> kGroupSizes = {5, 3, 7, 1};

// One row of the loop schedule. The offsets are the arguments of the
// mover's payoff before and after the move, less its auxiliary count on
// that color: 1 + core neighbors on the color.
struct LoopStep {
  PlayerId mover;
  Resource from;
  Resource to;
  std::size_t from_offset;
  std::size_t to_offset;
};

constexpr std::array<LoopStep, 11> kLoopSteps = {{
    {kA, kBlue, kRed, 1, 1},
    {kB, kPurple, kRed, 2, 1},
    {kD, kBlue, kRed, 1, 1},
    {kC, kPurple, kRed, 1, 4},
    {kA, kRed, kPurple, 2, 1},
    {kD, kRed, kBlue, 2, 1},
    {kB, kRed, kBlue, 2, 1},
    {kC, kRed, kBlue, 1, 3},
    {kA, kPurple, kBlue, 1, 2},
    {kC, kBlue, kPurple, 4, 1},
    {kB, kBlue, kPurple, 1, 2},
}};

constexpr std::array<Resource, 4> kLoopStart = {kBlue, kPurple, kPurple,
                                                kBlue};

constexpr std::array<Edge, 6> kCorePairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

const char* core_name(PlayerId p) {
  static constexpr const char* kNames[] = {"A", "B", "C", "D"};
  return kNames[p];
}

std::string describe_edges(const std::vector<Edge>& edges) {
  std::string out;
  for (const auto& [u, v] : edges) {
    if (!out.empty()) out += ", ";
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out.empty() ? "none" : out;
}

// Core graphs (as masks over kCorePairs) under which every step's offsets
// match the neighbor counts seen during the replay.
std::vector<unsigned> consistent_core_graphs() {
  std::vector<unsigned> out;
  for (unsigned mask = 0; mask < (1u << kCorePairs.size()); ++mask) {
    std::array<std::array<bool, 4>, 4> adjacent{};
    for (std::size_t e = 0; e < kCorePairs.size(); ++e) {
      if (mask & (1u << e)) {
        const auto [u, v] = kCorePairs[e];
        adjacent[u][v] = adjacent[v][u] = true;
      }
    }
    std::array<Resource, 4> colors = kLoopStart;
    bool consistent = true;
    for (const LoopStep& step : kLoopSteps) {
      std::size_t on_from = 0, on_to = 0;
      for (PlayerId q = 0; q < 4; ++q) {
        if (!adjacent[step.mover][q]) continue;
        if (colors[q] == step.from) ++on_from;
        if (colors[q] == step.to) ++on_to;
      }
      if (colors[step.mover] != step.from || on_from + 1 != step.from_offset ||
          on_to + 1 != step.to_offset) {
        consistent = false;
        break;
      }
      colors[step.mover] = step.to;
    }
    if (consistent) out.push_back(mask);
  }
  return out;
}

// Non-increasing sequence of `length` entries through the given points;
// gaps repeat the previous value, leading entries take the first value.
PayoffTable::Sequence fill_sequence(const std::map<std::size_t, Rational>& at,
                                    std::size_t length) {
  PayoffTable::Sequence seq(length);
  Rational current = at.begin()->second;
  for (std::size_t n = 1; n <= length; ++n) {
    if (auto it = at.find(n); it != at.end()) current = it->second;
    seq[n - 1] = current;
  }
  return seq;
}

std::vector<PayoffTable::Sequence> chain_tables(
    const std::vector<ChainEntry>& chain, std::size_t resources,
    std::size_t length) {
  std::vector<std::map<std::size_t, Rational>> points(resources);
  auto value = static_cast<std::int64_t>(chain.size());
  for (const ChainEntry& e : chain) {
    points[static_cast<std::size_t>(e.resource - 1)][e.argument] = value--;
  }
  std::vector<PayoffTable::Sequence> out;
  for (std::size_t r = 0; r < resources; ++r) {
    out.push_back(points[r].empty()
                      ? PayoffTable::Sequence(length, Rational(0))
                      : fill_sequence(points[r], length));
  }
  return out;
}

GameInstance shared_instance(InterferenceGraph graph,
                             std::vector<PayoffTable::Sequence> tables,
                             bool monotone) {
  const std::size_t n = graph.player_count();
  const std::size_t r = tables.size();
  std::vector<std::vector<PayoffTable::Sequence>> values(n, tables);
  return GameInstance(std::move(graph), r,
                      PayoffTable(std::move(values), monotone));
}

const std::vector<PayoffTable::Sequence>& non_monotonic_tables() {
  static const std::vector<PayoffTable::Sequence> kTables = {
      {2, 5, 3}, {4, 6, 1}};
  return kTables;
}

const std::vector<PayoffTable::Sequence>& directed_tables() {
  static const std::vector<PayoffTable::Sequence> kTables =
      chain_tables(directed_chain(), 3, 4);
  return kTables;
}

bool matrix_matches(const GameInstance& instance) {
  for (const MatrixCell& cell : non_monotonic_matrix()) {
    for (PlayerId p = 0; p < 3; ++p) {
      if (payoff(instance, cell.profile, p) != Rational(cell.payoffs[p])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::string to_string(CounterexampleName name) {
  switch (name) {
    case CounterexampleName::kThreeColorCycle:
      return "three-color";
    case CounterexampleName::kNonMonotonic:
      return "non-monotonic";
    case CounterexampleName::kDirectedNoNash:
      return "directed";
  }
  return "unknown";
}

std::optional<CounterexampleName> parse_counterexample_name(
    std::string_view text) {
  if (text == "three-color" || text == "three_color_cycle") {
    return CounterexampleName::kThreeColorCycle;
  }
  if (text == "non-monotonic" || text == "non_monotonic") {
    return CounterexampleName::kNonMonotonic;
  }
  if (text == "directed" || text == "directed_no_ne") {
    return CounterexampleName::kDirectedNoNash;
  }
  return std::nullopt;
}

const std::vector<ChainEntry>& three_color_chain() {
  static const std::vector<ChainEntry> kChain = {
      {kRed, 2},     {kBlue, 2},   {kRed, 3},    {kRed, 4},  {kPurple, 5},
      {kBlue, 4},    {kRed, 5},    {kRed, 6},    {kBlue, 6}, {kBlue, 7},
      {kPurple, 6},  {kRed, 7},    {kBlue, 10},  {kRed, 8},  {kRed, 11},
      {kPurple, 8},  {kBlue, 11}};
  return kChain;
}

const std::vector<ChainEntry>& directed_chain() {
  static const std::vector<ChainEntry> kChain = {
      {3, 1}, {2, 1}, {2, 2}, {3, 2}, {1, 1}, {1, 2},
      {2, 3}, {1, 3}, {2, 4}, {1, 4}, {3, 3}, {3, 4}};
  return kChain;
}

std::size_t chain_violations(const GameInstance& instance,
                             const std::vector<ChainEntry>& chain) {
  std::size_t bad = 0;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    if (!(instance.value(0, chain[k].resource, chain[k].argument) >
          instance.value(0, chain[k + 1].resource, chain[k + 1].argument))) {
      ++bad;
    }
  }
  return bad;
}

const std::vector<MatrixCell>& non_monotonic_matrix() {
  static const std::vector<MatrixCell> kCells = {
      {StrategyProfile({1, 1, 1}), {5, 5, 3}},
      {StrategyProfile({1, 2, 1}), {5, 4, 5}},
      {StrategyProfile({2, 1, 1}), {4, 5, 5}},
      {StrategyProfile({2, 2, 1}), {4, 4, 2}},
      {StrategyProfile({1, 1, 2}), {2, 2, 4}},
      {StrategyProfile({1, 2, 2}), {2, 6, 6}},
      {StrategyProfile({2, 1, 2}), {6, 2, 6}},
      {StrategyProfile({2, 2, 2}), {6, 6, 1}},
  };
  return kCells;
}

CanonicalInstance build_three_color_cycle(std::size_t resource_count) {
  if (resource_count < 3) {
    throw InputError("three-color loop needs at least 3 resources");
  }
  CanonicalInstance out;
  out.name = CounterexampleName::kThreeColorCycle;

  const auto graphs = consistent_core_graphs();
  if (graphs.size() != 1) {
    throw BuildError("loop schedule admits " + std::to_string(graphs.size()) +
                     " core topologies, expected exactly one");
  }
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < kCorePairs.size(); ++e) {
    if (graphs[0] & (1u << e)) edges.push_back(kCorePairs[e]);
  }
  std::string core;
  for (const auto& [u, v] : edges) {
    if (!core.empty()) core += ", ";
    core += std::string(core_name(u)) + "-" + core_name(v);
  }
  out.certificate.push_back("core edges consistent with all 11 step offsets: " +
                            core + " (1 of 64 candidates)");

  // Auxiliaries follow the core players: per core player, per color, a
  // private group of leaves.
  std::vector<Resource> start(kLoopStart.begin(), kLoopStart.end());
  std::vector<Resource> aux_color;
  PlayerId next = 4;
  for (PlayerId owner = 0; owner < 4; ++owner) {
    for (Resource color = 1; color <= 3; ++color) {
      for (std::size_t k = 0; k < kGroupSizes[owner]; ++k) {
        edges.emplace_back(owner, next++);
        start.push_back(color);
        aux_color.push_back(color);
      }
    }
  }
  InterferenceGraph graph(next, edges);
  const std::size_t length = graph.max_degree() + 1;

  auto core_tables = chain_tables(three_color_chain(), 3, length);
  for (std::size_t r = 3; r < resource_count; ++r) {
    core_tables.emplace_back(length, Rational(0));
  }
  std::vector<std::vector<PayoffTable::Sequence>> values(4, core_tables);
  for (Resource own : aux_color) {
    std::vector<PayoffTable::Sequence> row;
    for (std::size_t r = 1; r <= resource_count; ++r) {
      const std::int64_t v = static_cast<Resource>(r) == own ? 2
                             : r <= 3                        ? 1
                                                             : 0;
      row.emplace_back(2, Rational(v));
    }
    values.push_back(std::move(row));
  }
  out.instance = GameInstance(std::move(graph), resource_count,
                              PayoffTable(std::move(values), true));
  out.loop_start = StrategyProfile(std::move(start));
  for (const LoopStep& step : kLoopSteps) {
    out.loop_schedule.push_back({step.mover, step.to});
  }
  out.certificate.push_back(
      "auxiliary groups per color: A 5, B 3, C 7, D 1 (disjoint leaves)");
  out.certificate.push_back("payoff chain: 17 entries set to 17..1");

  if (chain_violations(out.instance, three_color_chain()) != 0) {
    throw BuildError("payoff chain does not descend strictly");
  }
  return out;
}

CanonicalInstance build_non_monotonic() {
  CanonicalInstance out;
  out.name = CounterexampleName::kNonMonotonic;
  out.expect_no_nash = true;
  const std::array<Edge, 3> pairs = {{{0, 1}, {0, 2}, {1, 2}}};
  std::vector<std::vector<Edge>> matching;
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if (mask & (1u << e)) edges.push_back(pairs[e]);
    }
    const GameInstance candidate = shared_instance(
        InterferenceGraph(3, edges), non_monotonic_tables(), false);
    if (matrix_matches(candidate)) matching.push_back(std::move(edges));
  }
  if (matching.size() != 1) {
    throw BuildError("game matrix matches " + std::to_string(matching.size()) +
                     " of 8 three-player graphs, expected exactly one");
  }
  out.certificate.push_back("edges matching all 8 matrix cells: " +
                            describe_edges(matching[0]) + " (1 of 8 graphs)");
  out.instance = shared_instance(InterferenceGraph(3, matching[0]),
                                 non_monotonic_tables(), false);
  return out;
}

CanonicalInstance build_directed_no_ne() {
  CanonicalInstance out;
  out.name = CounterexampleName::kDirectedNoNash;
  out.expect_no_nash = true;
  std::vector<Edge> arcs;
  for (PlayerId i = 0; i < 4; ++i) {
    for (PlayerId j = 0; j < 4; ++j) {
      if (i != j) arcs.emplace_back(i, j);
    }
  }
  std::vector<unsigned> masks(1u << arcs.size());
  for (unsigned m = 0; m < masks.size(); ++m) masks[m] = m;
  std::stable_sort(masks.begin(), masks.end(), [](unsigned x, unsigned y) {
    return std::popcount(x) < std::popcount(y);
  });
  std::size_t tried = 0;
  for (unsigned mask : masks) {
    ++tried;
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < arcs.size(); ++e) {
      if (mask & (1u << e)) edges.push_back(arcs[e]);
    }
    GameInstance candidate = shared_instance(
        InterferenceGraph(4, edges, Directedness::kDirected),
        directed_tables(), true);
    if (!enumerate_nash(candidate).empty()) continue;
    out.certificate.push_back(
        "arcs (i in the interference set of j): " + describe_edges(edges) +
        "; candidate " + std::to_string(tried) + " of " +
        std::to_string(masks.size()) + " by arc count then mask");
    out.instance = std::move(candidate);
    if (chain_violations(out.instance, directed_chain()) != 0) {
      throw BuildError("payoff chain does not descend strictly");
    }
    return out;
  }
  throw BuildError("no directed 4-node graph lacks a pure NE under the chain");
}

CanonicalInstance build_counterexample(CounterexampleName name) {
  switch (name) {
    case CounterexampleName::kThreeColorCycle:
      return build_three_color_cycle();
    case CounterexampleName::kNonMonotonic:
      return build_non_monotonic();
    case CounterexampleName::kDirectedNoNash:
      return build_directed_no_ne();
  }
  throw InputError("unknown counterexample");
}

CounterexampleReport verify_counterexample(const CanonicalInstance& c) {
  CounterexampleReport report;
  report.diagnostics = c.certificate;
  const GameInstance& instance = c.instance;

  if (c.name == CounterexampleName::kThreeColorCycle) {
    const ImprovementTrace trace =
        trace_from_moves(instance, c.loop_start, c.loop_schedule);
    bool all_improving = true;
    for (const ImprovementStep& step : trace.steps) {
      const bool improving = step.payoff_after > step.payoff_before;
      if (improving) ++report.verified_steps;
      all_improving = all_improving && improving;
      report.diagnostics.push_back(
          "t=" + std::to_string(step.time) + " " +
          (step.mover < 4 ? core_name(step.mover)
                          : std::to_string(step.mover).c_str()) +
          " " + std::to_string(step.from) + "->" + std::to_string(step.to) +
          " payoff " + to_string(step.payoff_before) + " -> " +
          to_string(step.payoff_after) + (improving ? "" : " NOT IMPROVING"));
    }
    const std::string replay = check_trace(instance, trace, true);
    const bool closed = trace.closed();
    const std::size_t chain_bad =
        chain_violations(instance, three_color_chain());
    report.pass = all_improving && replay.empty() && closed && chain_bad == 0 &&
                  instance.payoffs().non_increasing();
    report.summary = std::to_string(report.verified_steps) + "/" +
                     std::to_string(trace.steps.size()) +
                     " improving steps, loop " +
                     (closed ? "closed" : "NOT closed");
    if (!replay.empty()) report.diagnostics.push_back("replay: " + replay);
    if (chain_bad != 0) {
      report.diagnostics.push_back(std::to_string(chain_bad) +
                                   " chain inequalities violated");
    }
    return report;
  }

  const ProfileSpace space(instance.player_count(), instance.resource_count(),
                           default_profile_cap());
  report.profiles_checked = space.size();
  const auto nash = enumerate_nash(instance);
  report.nash_count = nash.size();
  for (const auto& p : nash) report.diagnostics.push_back("NE " + to_string(p));
  report.summary = std::to_string(report.nash_count) + " NE / " +
                   std::to_string(report.profiles_checked) + " profiles";
  bool extra_ok = true;
  if (c.name == CounterexampleName::kNonMonotonic) {
    extra_ok = matrix_matches(instance);
    report.diagnostics.push_back(std::string("game matrix: ") +
                                 (extra_ok ? "all 8 cells match" : "MISMATCH"));
  } else {
    extra_ok = chain_violations(instance, directed_chain()) == 0 &&
               instance.payoffs().non_increasing();
    std::vector<Edge> undirected;
    for (const auto& [u, v] : instance.graph().edges()) {
      undirected.emplace_back(std::min(u, v), std::max(u, v));
    }
    const GameInstance symmetric = shared_instance(
        InterferenceGraph(4, undirected), directed_tables(), true);
    report.diagnostics.push_back(
        "informational: undirected version has " +
        std::to_string(enumerate_nash(symmetric).size()) + " NE");
  }
  report.pass = extra_ok && (!c.expect_no_nash || report.nash_count == 0);
  return report;
}

}  // namespace scg

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


#include <algorithm>
#include <array>
#include <bit>
#include <tuple>

#include "doctest.h"
#include "oracles.hpp"
#include "scg/counterexamples.hpp"
#include "scg/dynamics.hpp"
#include "scg/equilibrium.hpp"
#include "scg/errors.hpp"
#include "test_util.hpp"

namespace scg {
namespace {

using testing::seq;

constexpr Resource kR = 1, kP = 2, kB = 3;
constexpr PlayerId kA = 0, kBnode = 1, kC = 2, kD = 3;

// (mover, from, to) per time step of the reference schedule.
const std::array<std::tuple<PlayerId, Resource, Resource>, 11> kTable = {{
    {kA, kB, kR},     {kBnode, kP, kR}, {kD, kB, kR},     {kC, kP, kR},
    {kA, kR, kP},     {kD, kR, kB},     {kBnode, kR, kB}, {kC, kR, kB},
    {kA, kP, kB},     {kC, kB, kP},     {kBnode, kB, kP}}};

// The single reference chain, highest first.
const std::array<std::pair<Resource, std::size_t>, 17> kColorChain = {{
    {kR, 2}, {kB, 2}, {kR, 3}, {kR, 4}, {kP, 5}, {kB, 4}, {kR, 5}, {kR, 6},
    {kB, 6}, {kB, 7}, {kP, 6}, {kR, 7}, {kB, 10}, {kR, 8}, {kR, 11},
    {kP, 8}, {kB, 11}}};

TEST_CASE("three-color loop replays the reference schedule") {
  const CanonicalInstance c = build_three_color_cycle();
  CHECK(c.loop_start[kA] == kB);
  CHECK(c.loop_start[kBnode] == kP);
  CHECK(c.loop_start[kC] == kP);
  CHECK(c.loop_start[kD] == kB);
  const auto trace = trace_from_moves(c.instance, c.loop_start, c.loop_schedule);
  REQUIRE(trace.steps.size() == 11);
  for (std::size_t t = 0; t < 11; ++t) {
    const auto& [mover, from, to] = kTable[t];
    CHECK(trace.steps[t].mover == mover);
    CHECK(trace.steps[t].from == from);
    CHECK(trace.steps[t].to == to);
    CHECK(trace.steps[t].payoff_after > trace.steps[t].payoff_before);
  }
  CHECK(trace.final_state() == c.loop_start);
  CHECK(check_trace(c.instance, trace, true).empty());
}

TEST_CASE("three-color instance shape") {
  const CanonicalInstance c = build_three_color_cycle();
  const InterferenceGraph& g = c.instance.graph();
  CHECK(g.player_count() == 52);
  CHECK(c.instance.payoffs().non_increasing());
  CHECK(g.interferes(kA, kC));
  CHECK(g.interferes(kBnode, kC));
  CHECK(g.interferes(kD, kC));
  CHECK_FALSE(g.interferes(kA, kBnode));
  CHECK_FALSE(g.interferes(kA, kD));
  CHECK_FALSE(g.interferes(kBnode, kD));

  // Auxiliary neighbors per color of each core player: 5, 3, 7, 1.
  const std::array<std::size_t, 4> group = {5, 3, 7, 1};
  const oracle::Plain p = oracle::flatten(c.instance);
  const auto s = oracle::to_vector(c.loop_start);
  for (PlayerId core = 0; core < 4; ++core) {
    for (Resource color = 1; color <= 3; ++color) {
      std::size_t aux = 0;
      for (std::size_t j : p.in[core]) aux += j >= 4 && s[j] == color;
      CHECK(aux == group[core]);
    }
  }
  // Auxiliaries have one neighbor and never want to move.
  for (PlayerId v = 4; v < 52; ++v) {
    CHECK(g.degree(v) == 1);
  }
  const auto trace = trace_from_moves(c.instance, c.loop_start, c.loop_schedule);
  for (std::size_t t = 1; t <= 12; ++t) {
    const StrategyProfile state = trace.state_before(t);
    for (PlayerId v = 4; v < 52; ++v) {
      CHECK(improving_deviations(c.instance, state, v).empty());
    }
  }
}

TEST_CASE("three-color payoffs follow the chain") {
  const CanonicalInstance c = build_three_color_cycle();
  for (std::size_t k = 0; k < kColorChain.size(); ++k) {
    const auto& [r, x] = kColorChain[k];
    CHECK(c.instance.value(kC, r, x) == static_cast<std::int64_t>(17 - k));
  }
  CHECK(chain_violations(c.instance, three_color_chain()) == 0);
  REQUIRE(three_color_chain().size() == kColorChain.size());
  for (std::size_t k = 0; k < kColorChain.size(); ++k) {
    CHECK(three_color_chain()[k].resource == kColorChain[k].first);
    CHECK(three_color_chain()[k].argument == kColorChain[k].second);
  }
}

TEST_CASE("each step compares two chain terms in the right order") {
  const CanonicalInstance c = build_three_color_cycle();
  const oracle::Plain p = oracle::flatten(c.instance);
  const auto trace = trace_from_moves(c.instance, c.loop_start, c.loop_schedule);
  auto position = [&](Resource r, std::size_t x) {
    const auto it = std::find(kColorChain.begin(), kColorChain.end(),
                              std::make_pair(r, x));
    return it == kColorChain.end() ? -1 : int(it - kColorChain.begin());
  };
  for (const auto& step : trace.steps) {
    const auto before = oracle::to_vector(trace.state_before(step.time));
    const auto after = oracle::to_vector(trace.state_before(step.time + 1));
    const std::size_t x_from =
        oracle::count_on(p, before, step.mover, step.from) + 1;
    const std::size_t x_to = oracle::count_on(p, after, step.mover, step.to) + 1;
    const int from_pos = position(step.from, x_from);
    const int to_pos = position(step.to, x_to);
    INFO("t=" << step.time);
    CHECK(from_pos >= 0);
    CHECK(to_pos >= 0);
    CHECK(to_pos < from_pos);
  }
}

TEST_CASE("three-color loop with extra resources") {
  const CanonicalInstance c = build_three_color_cycle(5);
  CHECK(c.instance.resource_count() == 5);
  CHECK(verify_counterexample(c).pass);
  CHECK(c.instance.value(kA, 4, 1) == 0);
  CHECK_THROWS_AS(build_three_color_cycle(2), InputError);
}

TEST_CASE("non-monotonic instance reproduces the reference matrix") {
  // Rows: player 2 on 1, then on 2; columns (player 0, player 1).
  const std::array<std::array<std::int64_t, 3>, 8> cells = {{
      {5, 5, 3}, {5, 4, 5}, {4, 5, 5}, {4, 4, 2},
      {2, 2, 4}, {2, 6, 6}, {6, 2, 6}, {6, 6, 1}}};
  const CanonicalInstance c = build_non_monotonic();
  CHECK_FALSE(c.instance.payoffs().monotone_asserted());
  CHECK(c.expect_no_nash);
  std::size_t k = 0;
  for (Resource s2 = 1; s2 <= 2; ++s2) {
    for (Resource s0 = 1; s0 <= 2; ++s0) {
      for (Resource s1 = 1; s1 <= 2; ++s1, ++k) {
        const StrategyProfile s({s0, s1, s2});
        for (PlayerId i = 0; i < 3; ++i) {
          CHECK(payoff(c.instance, s, i) == cells[k][i]);
        }
        CHECK(non_monotonic_matrix()[k].profile == s);
        CHECK(non_monotonic_matrix()[k].payoffs == cells[k]);
      }
    }
  }
  CHECK(c.instance.graph().interferes(0, 2));
  CHECK(c.instance.graph().interferes(1, 2));
  CHECK_FALSE(c.instance.graph().interferes(0, 1));
  CHECK(oracle::nash_set(c.instance).empty());
  CHECK(enumerate_nash(c.instance).empty());
}

TEST_CASE("directed instance") {
  const CanonicalInstance c = build_directed_no_ne();
  CHECK(c.instance.graph().directed());
  CHECK(c.instance.player_count() == 4);
  CHECK(c.instance.resource_count() == 3);
  CHECK(c.instance.payoffs().non_increasing());
  // The reference chain, highest first, set to 12..1.
  const std::array<std::pair<Resource, std::size_t>, 12> chain = {{
      {3, 1}, {2, 1}, {2, 2}, {3, 2}, {1, 1}, {1, 2},
      {2, 3}, {1, 3}, {2, 4}, {1, 4}, {3, 3}, {3, 4}}};
  for (std::size_t k = 0; k < chain.size(); ++k) {
    for (PlayerId i = 0; i < 4; ++i) {
      CHECK(c.instance.value(i, chain[k].first, chain[k].second) ==
            static_cast<std::int64_t>(12 - k));
    }
  }
  CHECK(chain_violations(c.instance, directed_chain()) == 0);
  CHECK(oracle::nash_set(c.instance).empty());
  CHECK(enumerate_nash(c.instance).empty());
}

TEST_CASE("every directed graph with fewer arcs has a pure NE") {
  const CanonicalInstance c = build_directed_no_ne();
  const std::size_t arcs = c.instance.graph().edges().size();
  std::vector<Edge> all;
  for (PlayerId i = 0; i < 4; ++i) {
    for (PlayerId j = 0; j < 4; ++j) {
      if (i != j) all.emplace_back(i, j);
    }
  }
  const oracle::Plain base = oracle::flatten(c.instance);
  std::size_t checked = 0;
  for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) >= arcs) continue;
    oracle::Plain p = base;
    p.in.assign(4, {});
    for (std::size_t e = 0; e < all.size(); ++e) {
      if (mask & (1u << e)) p.in[all[e].second].push_back(all[e].first);
    }
    CHECK_FALSE(oracle::nash_set(p).empty());
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("verification reports") {
  const auto three = verify_counterexample(build_three_color_cycle());
  CHECK(three.pass);
  CHECK(three.verified_steps == 11);
  CHECK(three.summary == "11/11 improving steps, loop closed");

  const auto flat = verify_counterexample(build_non_monotonic());
  CHECK(flat.pass);
  CHECK(flat.nash_count == 0);
  CHECK(flat.profiles_checked == 8);
  CHECK(flat.summary == "0 NE / 8 profiles");

  const auto directed = verify_counterexample(build_directed_no_ne());
  CHECK(directed.pass);
  CHECK(directed.profiles_checked == 81);
  CHECK(directed.summary == "0 NE / 81 profiles");
}

TEST_CASE("a broken loop fails verification") {
  CanonicalInstance c = build_three_color_cycle();
  c.loop_schedule[0].target = kP;
  CHECK_FALSE(verify_counterexample(c).pass);

  CanonicalInstance n = build_non_monotonic();
  n.instance = testing::shared(3, {}, {seq({2, 5, 3}), seq({4, 6, 1})}, false);
  CHECK_FALSE(verify_counterexample(n).pass);
}

TEST_CASE("counterexample names") {
  CHECK(parse_counterexample_name("three-color") ==
        CounterexampleName::kThreeColorCycle);
  CHECK(parse_counterexample_name("three_color_cycle") ==
        CounterexampleName::kThreeColorCycle);
  CHECK(parse_counterexample_name("non_monotonic") ==
        CounterexampleName::kNonMonotonic);
  CHECK(parse_counterexample_name("directed_no_ne") ==
        CounterexampleName::kDirectedNoNash);
  CHECK_FALSE(parse_counterexample_name("four-color").has_value());
  for (auto name : {CounterexampleName::kThreeColorCycle,
                    CounterexampleName::kNonMonotonic,
                    CounterexampleName::kDirectedNoNash}) {
    CHECK(parse_counterexample_name(to_string(name)) == name);
    CHECK(build_counterexample(name).name == name);
  }
}

}  // namespace
}  // namespace scg

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
#include <bit>
#include <map>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "scg/constructions.hpp"
#include "scg/counterexamples.hpp"
#include "scg/equilibrium.hpp"
#include "scg/errors.hpp"
#include "scg/generate.hpp"
#include "sweep_checks.hpp"
#include "test_util.hpp"

namespace scg {
namespace {

using testing::seq;
using testing::shared;

bool in_nash_set(const GameInstance& g, const StrategyProfile& s) {
  const auto all = oracle::nash_set(g);
  return std::find(all.begin(), all.end(), oracle::to_vector(s)) != all.end();
}

GameInstance random_family_instance(GraphFamily family, std::size_t n,
                                    std::size_t r, std::mt19937_64& rng,
                                    PayoffDraw draw = {}) {
  const InterferenceGraph graph = generate_graph(family, n, 2, rng);
  return testing::random_instance(graph, r, draw, rng);
}

TEST_CASE("graph family recognizers") {
  CHECK(is_tree(InterferenceGraph(1, {})));
  CHECK(is_tree(InterferenceGraph(3, {{0, 1}, {1, 2}})));
  CHECK_FALSE(is_tree(InterferenceGraph(3, {{0, 1}})));
  CHECK_FALSE(is_tree(InterferenceGraph(3, {{0, 1}, {1, 2}, {0, 2}})));
  CHECK_FALSE(is_tree(InterferenceGraph(2, {{0, 1}}, Directedness::kDirected)));

  const InterferenceGraph ring(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(cycle_order(ring) == std::vector<PlayerId>{0, 1, 2, 3, 4});
  const InterferenceGraph shuffled(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
  CHECK(cycle_order(shuffled) == std::vector<PlayerId>{0, 2, 1, 3});
  CHECK_THROWS_AS(cycle_order(InterferenceGraph(3, {{0, 1}, {1, 2}})),
                  InputError);
  CHECK_THROWS_AS(
      cycle_order(InterferenceGraph(
          6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})),
      InputError);

  const auto cube = regular_bipartition(InterferenceGraph(8, testing::cube_edges()));
  REQUIRE(cube.has_value());
  CHECK(cube->degree == 3);
  for (const auto& [u, v] : testing::cube_edges()) {
    CHECK(cube->side[u] != cube->side[v]);
  }
  CHECK_FALSE(regular_bipartition(ring).has_value());
  CHECK_FALSE(
      regular_bipartition(InterferenceGraph(3, {{0, 1}, {1, 2}})).has_value());
  const auto two_edges = regular_bipartition(InterferenceGraph(4, {{0, 1}, {2, 3}}));
  REQUIRE(two_edges.has_value());
  CHECK(two_edges->degree == 1);
}

TEST_CASE("tree construction on tiny trees") {
  const GameInstance single = testing::per_player(
      1, {}, {{seq({3}), seq({5}), seq({5})}}, {{3, 2, 1}});
  const auto one = construct_tree_ne(single);
  CHECK(one.verified);
  CHECK(one.profile == StrategyProfile({3}));

  const GameInstance path = testing::per_player(
      2, {{0, 1}}, {{seq({5, 1}), seq({3, 3})}, {seq({4, 0}), seq({3, 3})}});
  const auto two = construct_tree_ne(path);
  CHECK(two.verified);
  CHECK(two.method == "tree:leaf-induction");
  CHECK(in_nash_set(path, two.profile));
}

TEST_CASE("tree construction rejects bad inputs") {
  const GameInstance cyc = shared(3, {{0, 1}, {1, 2}, {2, 0}},
                                  {seq({3, 2, 1}), seq({3, 2, 1})});
  CHECK_THROWS_AS(construct_tree_ne(cyc), InputError);
  const GameInstance rising = testing::per_player(
      2, {{0, 1}}, {{seq({1, 5}), seq({3, 3})}, {seq({4, 0}), seq({3, 3})}});
  CHECK_THROWS_AS(construct_tree_ne(rising), InputError);
}

TEST_CASE("property: tree construction returns a member of the NE set") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    PayoffDraw draw;
    draw.max_value = 1 + rng() % 8;  // small ranges force ties
    const GameInstance g = random_family_instance(
        GraphFamily::kTree, 1 + rng() % 7, 1 + rng() % 4, rng, draw);
    const auto report = construct_tree_ne(g);
    CHECK(report.verified);
    CHECK(in_nash_set(g, report.profile));
  }
}

TEST_CASE("loop type triples") {
  const GameInstance flat = shared(3, {{0, 1}, {1, 2}, {2, 0}},
                                   {seq({9, 5, 1}), seq({9, 5, 1}),
                                    seq({9, 5, 1}), seq({9, 5, 1})});
  for (const TypeTriple& t : loop_type_triples(flat)) {
    CHECK(t == TypeTriple{1, 2, 3});
  }
  const GameInstance sticky = shared(3, {{0, 1}, {1, 2}, {2, 0}},
                                     {seq({9, 8, 1}), seq({5, 5, 5})});
  for (const TypeTriple& t : loop_type_triples(sticky)) {
    CHECK(t.a == 1);
    CHECK(t.b == 1);
  }
  const GameInstance steep = shared(
      3, {{0, 1}, {1, 2}, {2, 0}},
      {seq({9, 0, 0}), seq({8, 0, 0}), seq({7, 7, 7})});
  for (const TypeTriple& t : loop_type_triples(steep)) {
    CHECK(t == TypeTriple{1, 2, 3});
  }
  CHECK_THROWS_AS(
      loop_type_triples(shared(3, {{0, 1}, {1, 2}}, {seq({1, 1}), seq({1, 1})})),
      InputError);
}

TEST_CASE("sweep assignment") {
  const GameInstance g = shared(
      6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}},
      {seq({5, 1, 0}), seq({4, 0, 0})});
  CHECK(sweep_assignment(g, SweepStart::kFirstChoice) ==
        StrategyProfile({1, 2, 1, 2, 1, 2}));
  CHECK(sweep_assignment(g, SweepStart::kSecondChoice) ==
        StrategyProfile({2, 1, 2, 1, 2, 1}));
  CHECK(is_nash(g, sweep_assignment(g, SweepStart::kFirstChoice)).is_nash);
  CHECK(sweep_assignment(g, SweepStart::kFirstChoice, {1, true}) ==
        StrategyProfile({2, 1, 2, 1, 2, 1}));
  CHECK_THROWS_AS(sweep_assignment(g, SweepStart::kFirstChoice, {6, false}),
                  InputError);

  const GameInstance sticky = shared(3, {{0, 1}, {1, 2}, {2, 0}},
                                     {seq({9, 8, 1}), seq({5, 5, 5})});
  CHECK_THROWS_AS(sweep_assignment(sticky, SweepStart::kFirstChoice),
                  InputError);
}

TEST_CASE("property: sweep assignments have the five structural properties") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const GameInstance g =
        testing::random_sweepable_cycle(3 + rng() % 8, 2 + rng() % 3, rng);
    CHECK(testing::sweep_property_failure(g, SweepStart::kFirstChoice) == "");
    CHECK(testing::sweep_property_failure(g, SweepStart::kSecondChoice) ==
          "");
  }
}

TEST_CASE("loop construction on hand-built cases") {
  const GameInstance dominant = shared(3, {{0, 1}, {1, 2}, {2, 0}},
                                       {seq({9, 9, 9}), seq({2, 1, 0})});
  const auto all_one = construct_loop_ne(dominant);
  CHECK(all_one.verified);
  CHECK(all_one.profile == StrategyProfile({1, 1, 1}));

  // Every player ranks 1 then 2 and never wants 3: two-resource fallback.
  const GameInstance paired = shared(
      5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}},
      {seq({5, 1, 0}), seq({4, 0, 0}), seq({0, 0, 0})});
  const auto two = construct_loop_ne(paired);
  CHECK(two.verified);
  CHECK(two.method == "loop:two-resource-dynamics");
  CHECK(in_nash_set(paired, two.profile));

  // Odd cycle with three distinct choices per player.
  const GameInstance three = shared(
      5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}},
      {seq({9, 0, 0}), seq({8, 0, 0}), seq({7, 7, 7})});
  const auto distinct = construct_loop_ne(three);
  CHECK(distinct.verified);
  CHECK(distinct.method.rfind("loop:three-distinct", 0) == 0);

  // Everyone starts on 1; second choices alternate between 2 and 3.
  const std::vector<PayoffTable::Sequence> to2 = {seq({5, 1, 0}),
                                                  seq({4, 0, 0}), seq({0, 0, 0})};
  const std::vector<PayoffTable::Sequence> to3 = {seq({5, 1, 0}), seq({0, 0, 0}),
                                                  seq({4, 0, 0})};
  const GameInstance mixed = testing::per_player(
      4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {to2, to3, to2, to3});
  const auto mismatch = construct_loop_ne(mixed);
  CHECK(mismatch.verified);
  CHECK(mismatch.method == "loop:second-choice-mismatch");
  CHECK(in_nash_set(mixed, mismatch.profile));

  const GameInstance rising = shared(3, {{0, 1}, {1, 2}, {2, 0}},
                                     {seq({1, 2, 3}), seq({2, 2, 2})}, false);
  CHECK_THROWS_AS(construct_loop_ne(rising), InputError);
}

TEST_CASE("property: loop construction covers every case and returns an NE") {
  std::mt19937_64 rng(43);
  std::map<std::string, int> methods;
  for (int trial = 0; trial < 1500; ++trial) {
    PayoffDraw draw;
    draw.max_value = 1 + rng() % 10;
    draw.non_user_specific = trial % 3 == 0;
    const GameInstance g = random_family_instance(
        GraphFamily::kLoop, 3 + rng() % 6, 2 + rng() % 3, rng, draw);
    const auto report = construct_loop_ne(g);
    CHECK(report.verified);
    CHECK(in_nash_set(g, report.profile));
    ++methods[report.method];
  }
  for (const char* m :
       {"loop:pinned-player", "loop:three-distinct",
        "loop:first-choice-mismatch", "loop:two-resource-dynamics"}) {
    INFO(m);
    CHECK(methods[m] > 0);
  }
}

TEST_CASE("bipartite construction") {
  const GameInstance cube_dom = shared(
      8, testing::cube_edges(), {seq({10, 9, 8, 7}), seq({6, 5, 4, 3})});
  const auto dom = construct_bipartite_ne(cube_dom);
  CHECK(dom.verified);
  CHECK(dom.method == "bipartite:dominant");
  CHECK(dom.profile == StrategyProfile(8, 1));

  const GameInstance cube_two = shared(
      8, testing::cube_edges(), {seq({10, 1, 1, 1}), seq({6, 5, 4, 3})});
  const auto two = construct_bipartite_ne(cube_two);
  CHECK(two.verified);
  CHECK(two.method == "bipartite:two-coloring");
  for (const auto& [u, v] : testing::cube_edges()) {
    CHECK(two.profile[u] != two.profile[v]);
  }

  const GameInstance edge = shared(2, {{0, 1}}, {seq({5, 0}), seq({4, 4})});
  const auto e = construct_bipartite_ne(edge);
  CHECK(e.verified);
  CHECK((e.profile == StrategyProfile({1, 2}) ||
         e.profile == StrategyProfile({2, 1})));

  // Unsorted resources are ranked internally.
  const GameInstance swapped =
      shared(2, {{0, 1}}, {seq({4, 4}), seq({5, 0})});
  CHECK(construct_bipartite_ne(swapped).verified);

  CHECK_THROWS_AS(construct_bipartite_ne(shared(3, {{0, 1}, {1, 2}},
                                                {seq({2, 1}), seq({2, 1})})),
                  InputError);
  const GameInstance specific = testing::per_player(
      2, {{0, 1}}, {{seq({5, 0}), seq({4, 4})}, {seq({5, 0}), seq({4, 3})}});
  CHECK_THROWS_AS(construct_bipartite_ne(specific), InputError);
}

TEST_CASE("property: bipartite construction on random regular bipartite games") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t half = 1 + rng() % 4;
    const std::size_t d = 1 + rng() % half;
    const InterferenceGraph graph =
        generate_graph(GraphFamily::kBipartite, 2 * half, d, rng);
    PayoffDraw draw;
    draw.non_user_specific = true;
    draw.max_value = 1 + rng() % 12;
    const GameInstance g =
        testing::random_instance(graph, 1 + rng() % 4, draw, rng);
    const auto report = construct_bipartite_ne(g);
    CHECK(report.verified);
    CHECK(in_nash_set(g, report.profile));
  }
}

TEST_CASE("dominant resource") {
  const GameInstance flat = shared(3, {{0, 1}, {1, 2}},
                                   {seq({2, 2, 2}), seq({2, 2, 2})});
  CHECK(find_dominant_resource(flat) == 1);
  CHECK(construct_dominant_ne(flat).profile == StrategyProfile(3, 1));

  CHECK_FALSE(find_dominant_resource(build_non_monotonic().instance));
  CHECK_THROWS_AS(construct_dominant_ne(build_non_monotonic().instance),
                  InputError);

  const GameInstance second = shared(3, {{0, 1}, {1, 2}},
                                     {seq({3, 1, 0}), seq({9, 9, 9})});
  CHECK(find_dominant_resource(second) == 2);
}

TEST_CASE("property: a dominant resource yields an equilibrium on any graph") {
  std::mt19937_64 rng(45);
  int found = 0;
  for (int trial = 0; trial < 400; ++trial) {
    PayoffDraw draw;
    draw.max_value = 1 + rng() % 4;
    const GameInstance g = random_family_instance(
        GraphFamily::kRandom, 2 + rng() % 5, 1 + rng() % 3, rng, draw);
    const auto r = find_dominant_resource(g);
    if (!r) continue;
    ++found;
    const auto report = construct_dominant_ne(g);
    CHECK(report.verified);
    CHECK(report.profile == StrategyProfile(g.player_count(), *r));
  }
  CHECK(found > 10);
}

}  // namespace
}  // namespace scg

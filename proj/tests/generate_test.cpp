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


#include <random>

#include "doctest.h"
#include "scg/constructions.hpp"
#include "scg/errors.hpp"
#include "scg/generate.hpp"
#include "scg/io.hpp"

namespace scg {
namespace {

bool connected(const InterferenceGraph& g) {
  std::vector<bool> seen(g.player_count(), false);
  std::vector<PlayerId> stack = {0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const PlayerId u = stack.back();
    stack.pop_back();
    for (PlayerId v = 0; v < g.player_count(); ++v) {
      if (!seen[v] && g.interferes(u, v)) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == g.player_count();
}

TEST_CASE("graph families have the promised shape") {
  std::mt19937_64 rng(61);
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto tree = generate_graph(GraphFamily::kTree, n, 0, rng);
    CHECK(is_tree(tree));
    const auto random = generate_graph(GraphFamily::kRandom, n, 0, rng);
    CHECK(connected(random));
    CHECK(random.edges().size() >= n - 1);
    CHECK(random.edges().size() <= 2 * n - 1);
    if (n >= 3) {
      const auto loop = generate_graph(GraphFamily::kLoop, n, 0, rng);
      CHECK(cycle_order(loop).size() == n);
    }
  }
  for (std::size_t half = 1; half <= 6; ++half) {
    for (std::size_t d = 1; d <= half; ++d) {
      const auto g = generate_graph(GraphFamily::kBipartite, 2 * half, d, rng);
      const auto split = regular_bipartition(g);
      REQUIRE(split.has_value());
      CHECK(split->degree == d);
    }
  }
  CHECK_THROWS_AS(generate_graph(GraphFamily::kLoop, 2, 0, rng), InputError);
  CHECK_THROWS_AS(generate_graph(GraphFamily::kBipartite, 5, 1, rng),
                  InputError);
  CHECK_THROWS_AS(generate_graph(GraphFamily::kBipartite, 4, 3, rng),
                  InputError);
}

TEST_CASE("payoff draws honor their flags") {
  std::mt19937_64 rng(62);
  for (int k = 0; k < 100; ++k) {
    const auto graph = generate_graph(GraphFamily::kRandom, 1 + rng() % 7, 0, rng);
    PayoffDraw draw;
    draw.identical_resources = k % 2 == 0;
    draw.non_user_specific = k % 3 == 0;
    draw.max_value = 1 + rng() % 9;
    draw.max_denominator = 1 + rng() % 4;
    const std::size_t r = 1 + rng() % 4;
    const GameInstance g(graph, r, random_payoffs(graph, r, draw, rng));
    CHECK(g.payoffs().non_increasing());
    CHECK(g.payoffs().monotone_asserted());
    if (draw.identical_resources) CHECK(has_identical_resources(g));
    if (draw.non_user_specific) CHECK(is_non_user_specific(g));
    for (PlayerId i = 0; i < g.player_count(); ++i) {
      for (Resource res = 1; res <= static_cast<Resource>(r); ++res) {
        const auto& seq = g.payoffs().raw()[i][res - 1];
        CHECK(seq.size() >= graph.degree(i) + 1);
        for (const Rational& v : seq) {
          CHECK(v > 0);
          CHECK(v <= draw.max_value);
          CHECK(v.denominator() <= draw.max_denominator);
        }
      }
    }
  }
}

TEST_CASE("generation is a function of the options") {
  GeneratorOptions o;
  o.family = GraphFamily::kLoop;
  o.players = 5;
  o.resources = 3;
  o.seed = 7;
  const std::string a = serialize_instance(generate_instance(o));
  CHECK(a == serialize_instance(generate_instance(o)));
  o.seed = 8;
  CHECK(a != serialize_instance(generate_instance(o)));
  o.players = 0;
  CHECK_THROWS_AS(generate_instance(o), InputError);
  o.players = 3;
  o.resources = 0;
  CHECK_THROWS_AS(generate_instance(o), InputError);
}

TEST_CASE("family names") {
  for (auto f : {GraphFamily::kTree, GraphFamily::kLoop,
                 GraphFamily::kBipartite, GraphFamily::kRandom}) {
    CHECK(parse_graph_family(to_string(f)) == f);
  }
  CHECK_THROWS_AS(parse_graph_family("grid"), InputError);
}

}  // namespace
}  // namespace scg

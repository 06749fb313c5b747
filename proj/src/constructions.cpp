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

#include "scg/constructions.hpp"

#include <algorithm>
#include <array>
#include <queue>

#include "scg/dynamics.hpp"
#include "scg/equilibrium.hpp"
#include "scg/errors.hpp"

namespace scg {
namespace {

void require_undirected(const GameInstance& instance, const char* family) {
  if (instance.graph().directed()) {
    throw InputError(std::string(family) +
                     " construction needs an undirected graph");
  }
}

void require_non_increasing(const GameInstance& instance) {
  if (!instance.payoffs().non_increasing()) {
    throw InputError("construction needs non-increasing payoffs");
  }
}

ConstructionReport finish(const GameInstance& instance,
                          StrategyProfile profile, std::string method,
                          std::vector<std::string> notes = {}) {
  ConstructionReport report;
  report.verified = is_nash(instance, profile).is_nash;
  report.profile = std::move(profile);
  report.method = std::move(method);
  report.notes = std::move(notes);
  return report;
}

// Leaf-by-leaf induction over a BFS order of a tree. A leaf takes its best
// response to its parent; if that leaves the parent wanting to move, the
// smaller game is re-solved with the parent's payoff on the leaf's resource
// shifted by one (the leaf's presence built into the parent's table).
class LeafInduction {
 public:
  explicit LeafInduction(const GameInstance& instance)
      : instance_(instance),
        n_(instance.player_count()),
        rank_(n_, n_),
        parent_(n_, n_) {
    std::queue<PlayerId> frontier;
    frontier.push(0);
    rank_[0] = 0;
    order_.push_back(0);
    while (!frontier.empty()) {
      const PlayerId u = frontier.front();
      frontier.pop();
      for (PlayerId v : instance.graph().interference_set(u)) {
        if (rank_[v] != n_) continue;
        rank_[v] = order_.size();
        parent_[v] = u;
        order_.push_back(v);
        frontier.push(v);
      }
    }
  }

  StrategyProfile solve() {
    StrategyProfile profile(n_, 1);
    Shift shift(n_, std::vector<std::size_t>(instance_.resource_count(), 0));
    solve(shift, n_, profile);
    return profile;
  }

  std::size_t reductions() const { return reductions_; }

 private:
  using Shift = std::vector<std::vector<std::size_t>>;

  const Rational& value(const Shift& shift, PlayerId i, Resource r,
                        std::size_t n) const {
    return instance_.value(i, r, n + shift[i][static_cast<std::size_t>(r - 1)]);
  }

  // Payoff of i on r counting only neighbors among the first k vertices.
  const Rational& payoff_on(const Shift& shift, const StrategyProfile& profile,
                            PlayerId i, Resource r, std::size_t k) const {
    std::size_t count = 0;
    for (PlayerId j : instance_.graph().interference_set(i)) {
      if (rank_[j] < k && profile[j] == r) ++count;
    }
    return value(shift, i, r, count + 1);
  }

  Resource best(const Shift& shift, const StrategyProfile& profile, PlayerId i,
                std::size_t k) const {
    Resource choice = 0;
    const Rational* best_value = nullptr;
    for (Resource r : instance_.preference(i)) {
      const Rational& v = payoff_on(shift, profile, i, r, k);
      if (best_value == nullptr || v > *best_value) {
        choice = r;
        best_value = &v;
      }
    }
    return choice;
  }

  bool improvable(const Shift& shift, const StrategyProfile& profile,
                  PlayerId i, std::size_t k) const {
    const Rational& current = payoff_on(shift, profile, i, profile[i], k);
    for (std::size_t r = 1; r <= instance_.resource_count(); ++r) {
      if (payoff_on(shift, profile, i, static_cast<Resource>(r), k) > current) {
        return true;
      }
    }
    return false;
  }

  // Fills the first k BFS vertices with an equilibrium of the game induced
  // on them under `shift`.
  void solve(const Shift& shift, std::size_t k, StrategyProfile& profile) {
    if (k == 1) {
      profile[order_[0]] = best(shift, profile, order_[0], 1);
      return;
    }
    solve(shift, k - 1, profile);
    const PlayerId leaf = order_[k - 1];
    const PlayerId anchor = parent_[leaf];
    const Resource chosen = best(shift, profile, leaf, k);
    profile[leaf] = chosen;
    if (profile[anchor] != chosen) return;
    if (!improvable(shift, profile, anchor, k)) return;
    Shift reduced = shift;
    ++reduced[anchor][static_cast<std::size_t>(chosen - 1)];
    ++reductions_;
    solve(reduced, k - 1, profile);
    profile[leaf] = chosen;
  }

  const GameInstance& instance_;
  std::size_t n_;
  std::vector<std::size_t> rank_;
  std::vector<PlayerId> parent_;
  std::vector<PlayerId> order_;
  std::size_t reductions_ = 0;
};

std::size_t mod(std::int64_t value, std::size_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return static_cast<std::size_t>(((value % m) + m) % m);
}

// Players by position under a relabeling.
std::vector<PlayerId> positions(const std::vector<PlayerId>& order,
                                const LoopRelabeling& relabeling) {
  const std::size_t n = order.size();
  std::vector<PlayerId> at(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto base = static_cast<std::int64_t>(relabeling.offset);
    const auto step = static_cast<std::int64_t>(k);
    at[k] = order[mod(relabeling.reflected ? base - step : base + step, n)];
  }
  return at;
}

std::vector<Resource> sweep(const std::vector<TypeTriple>& triples,
                            const std::vector<PlayerId>& at,
                            SweepStart start) {
  std::vector<Resource> choice(at.size());
  const TypeTriple& first = triples[at[0]];
  choice[0] = start == SweepStart::kFirstChoice ? first.a : first.b;
  for (std::size_t k = 1; k < at.size(); ++k) {
    const TypeTriple& t = triples[at[k]];
    choice[k] = t.a == choice[k - 1] ? t.b : t.a;
  }
  return choice;
}

StrategyProfile to_profile(const std::vector<PlayerId>& at,
                           const std::vector<Resource>& choice) {
  StrategyProfile profile(at.size(), 1);
  for (std::size_t k = 0; k < at.size(); ++k) profile[at[k]] = choice[k];
  return profile;
}

std::string describe(const LoopRelabeling& relabeling) {
  return "relabeled: offset " + std::to_string(relabeling.offset) +
         (relabeling.reflected ? ", reflected" : ", forward");
}

bool contains(const TypeTriple& t, Resource r) {
  return t.a == r || t.b == r || t.c == r;
}

// a(i*) = b(i*): pin i* on a(i*), solve the remaining path with i*'s
// neighbors' tables shifted on that resource, then let i* respond.
ConstructionReport loop_with_pinned_player(
    const GameInstance& instance, const std::vector<PlayerId>& order,
    const std::vector<TypeTriple>& triples, std::size_t pinned_pos) {
  const std::size_t n = order.size();
  const PlayerId pinned = order[pinned_pos];
  const Resource held = triples[pinned].a;

  std::vector<PlayerId> line(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    line[k] = order[(pinned_pos + 1 + k) % n];
  }
  std::vector<Edge> edges;
  for (std::size_t k = 0; k + 2 < n; ++k) edges.emplace_back(k, k + 1);

  std::vector<std::vector<PayoffTable::Sequence>> tables;
  std::vector<std::vector<Resource>> prefs;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const PlayerId p = line[k];
    std::vector<PayoffTable::Sequence> row;
    for (std::size_t r = 1; r <= instance.resource_count(); ++r) {
      PayoffTable::Sequence seq =
          instance.payoffs().sequence(p, static_cast<Resource>(r));
      const bool next_to_pinned = k == 0 || k + 2 == n;
      if (next_to_pinned && static_cast<Resource>(r) == held &&
          seq.size() > 1) {
        seq.erase(seq.begin());
      }
      row.push_back(std::move(seq));
    }
    tables.push_back(std::move(row));
    const auto pref = instance.preference(p);
    prefs.emplace_back(pref.begin(), pref.end());
  }
  const GameInstance path(InterferenceGraph(n - 1, edges),
                          instance.resource_count(),
                          PayoffTable(std::move(tables), false),
                          std::move(prefs));
  const ConstructionReport inner = construct_tree_ne(path);

  StrategyProfile profile(n, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) profile[line[k]] = inner.profile[k];
  profile[pinned] = held;

  std::vector<std::string> notes = {
      "pinned player " + std::to_string(pinned) + " on resource " +
          std::to_string(held),
      "path equilibrium: first found by leaf induction"};
  const PlayerId before = order[(pinned_pos + n - 1) % n];
  const PlayerId after = order[(pinned_pos + 1) % n];
  std::string method = "loop:pinned-player";
  if (profile[before] == held && profile[after] == held &&
      triples[pinned].c != held) {
    profile[pinned] = triples[pinned].c;
    method = "loop:pinned-player:switched";
  }
  return finish(instance, std::move(profile), std::move(method),
                std::move(notes));
}

// Some player's a, b, c are pairwise distinct; it is placed last.
ConstructionReport loop_with_three_distinct(
    const GameInstance& instance, const std::vector<PlayerId>& order,
    const std::vector<TypeTriple>& triples, std::size_t special_pos) {
  const std::size_t n = order.size();
  const LoopRelabeling relabeling{(special_pos + 1) % n, false};
  const auto at = positions(order, relabeling);
  auto choice = sweep(triples, at, SweepStart::kFirstChoice);
  const TypeTriple& last = triples[at[n - 1]];
  std::string method = "loop:three-distinct";
  if (choice[n - 1] == choice[0]) {
    const std::array<Resource, 2> seen{std::min(choice[n - 2], choice[0]),
                                       std::max(choice[n - 2], choice[0])};
    const std::array<Resource, 2> ab{std::min(last.a, last.b),
                                     std::max(last.a, last.b)};
    if (seen == ab) {
      choice[n - 1] = last.c;
      method = "loop:three-distinct:last-to-c";
    } else if (choice[n - 1] == last.a) {
      choice[n - 1] = last.b;
      method = "loop:three-distinct:last-to-b";
    }
  }
  return finish(instance, to_profile(at, choice), std::move(method),
                {describe(relabeling)});
}

GameInstance restrict_resources(const GameInstance& instance,
                                std::array<Resource, 2> kept) {
  std::vector<std::vector<PayoffTable::Sequence>> tables;
  std::vector<std::vector<Resource>> prefs;
  for (PlayerId p = 0; p < instance.player_count(); ++p) {
    tables.push_back({instance.payoffs().sequence(p, kept[0]),
                      instance.payoffs().sequence(p, kept[1])});
    const bool first_preferred = instance.preference_rank(p, kept[0]) <
                                 instance.preference_rank(p, kept[1]);
    prefs.push_back(first_preferred ? std::vector<Resource>{1, 2}
                                    : std::vector<Resource>{2, 1});
  }
  return GameInstance(instance.graph(), 2,
                      PayoffTable(std::move(tables), false), std::move(prefs));
}

// Every c is a or b.
ConstructionReport loop_with_two_choice_types(
    const GameInstance& instance, const std::vector<PlayerId>& order,
    const std::vector<TypeTriple>& triples) {
  const std::size_t n = order.size();
  auto neighbor_relabel = [&](std::size_t p, std::size_t q) {
    // p goes to position 0 and its neighbor q to position N - 1.
    return q == (p + n - 1) % n ? LoopRelabeling{p, false}
                                : LoopRelabeling{p, true};
  };
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q : {(p + n - 1) % n, (p + 1) % n}) {
        const TypeTriple& tp = triples[order[p]];
        const TypeTriple& tq = triples[order[q]];
        const Resource probe = pass == 0 ? tp.a : tp.b;
        if (contains(tq, probe)) continue;
        const LoopRelabeling relabeling = neighbor_relabel(p, q);
        const auto at = positions(order, relabeling);
        const SweepStart start =
            pass == 0 ? SweepStart::kFirstChoice : SweepStart::kSecondChoice;
        return finish(instance, to_profile(at, sweep(triples, at, start)),
                      pass == 0 ? "loop:first-choice-mismatch"
                                : "loop:second-choice-mismatch",
                      {describe(relabeling)});
      }
    }
  }

  // All players share the same two-element choice set.
  const TypeTriple& t0 = triples[order[0]];
  const std::array<Resource, 2> kept{std::min(t0.a, t0.b),
                                     std::max(t0.a, t0.b)};
  const GameInstance reduced = restrict_resources(instance, kept);
  const Resource start_local = t0.a == kept[0] ? 1 : 2;
  DynamicsOptions options;
  options.scheduler = SchedulerKind::kRoundRobin;
  options.mode = Mode::kBetterResponse;
  options.max_steps = std::size_t{1} << 24;
  const DynamicsResult run = run_dynamics(
      reduced, StrategyProfile(n, start_local), options);
  StrategyProfile profile(n, 1);
  for (PlayerId p = 0; p < n; ++p) {
    profile[p] = kept[static_cast<std::size_t>(run.trace.final_state()[p] - 1)];
  }
  return finish(instance, std::move(profile), "loop:two-resource-dynamics",
                {"resources " + std::to_string(kept[0]) + ", " +
                     std::to_string(kept[1]) + "; " +
                     std::to_string(run.trace.steps.size()) +
                     " improvement steps, " + to_string(run.status)});
}

}  // namespace

bool is_tree(const InterferenceGraph& graph) {
  if (graph.directed()) return false;
  const std::size_t n = graph.player_count();
  if (graph.edges().size() != n - 1) return false;
  std::vector<bool> seen(n, false);
  std::vector<PlayerId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const PlayerId u = stack.back();
    stack.pop_back();
    for (PlayerId v : graph.interference_set(u)) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

std::vector<PlayerId> cycle_order(const InterferenceGraph& graph) {
  const std::size_t n = graph.player_count();
  if (graph.directed() || n < 3 || graph.edges().size() != n) {
    throw InputError("graph is not a single undirected cycle");
  }
  for (PlayerId p = 0; p < n; ++p) {
    if (graph.degree(p) != 2) {
      throw InputError("graph is not a single undirected cycle");
    }
  }
  std::vector<PlayerId> order{0};
  PlayerId prev = 0;
  PlayerId cur = graph.interference_set(0)[0];
  while (cur != 0) {
    order.push_back(cur);
    const auto nb = graph.interference_set(cur);
    const PlayerId next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    if (order.size() > n) break;
  }
  if (order.size() != n) {
    throw InputError("graph is not a single undirected cycle");
  }
  return order;
}

std::optional<Bipartition> regular_bipartition(
    const InterferenceGraph& graph) {
  if (graph.directed()) return std::nullopt;
  const std::size_t n = graph.player_count();
  Bipartition out;
  out.degree = graph.degree(0);
  out.side.assign(n, -1);
  for (PlayerId p = 0; p < n; ++p) {
    if (graph.degree(p) != out.degree) return std::nullopt;
  }
  for (PlayerId root = 0; root < n; ++root) {
    if (out.side[root] != -1) continue;
    out.side[root] = 0;
    std::queue<PlayerId> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const PlayerId u = frontier.front();
      frontier.pop();
      for (PlayerId v : graph.interference_set(u)) {
        if (out.side[v] == -1) {
          out.side[v] = 1 - out.side[u];
          frontier.push(v);
        } else if (out.side[v] == out.side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return out;
}

ConstructionReport construct_tree_ne(const GameInstance& instance) {
  if (!is_tree(instance.graph())) {
    throw InputError("tree construction needs an undirected tree");
  }
  require_non_increasing(instance);
  LeafInduction induction(instance);
  StrategyProfile profile = induction.solve();
  return finish(instance, std::move(profile), "tree:leaf-induction",
                {"BFS from player 0; " +
                 std::to_string(induction.reductions()) +
                 " reduced re-solves"});
}

std::vector<TypeTriple> loop_type_triples(const GameInstance& instance) {
  cycle_order(instance.graph());
  std::vector<TypeTriple> out(instance.player_count());
  for (PlayerId p = 0; p < instance.player_count(); ++p) {
    TypeTriple& t = out[p];
    t.a = best_response_to(instance, p, {});
    const std::array<Resource, 1> one{t.a};
    t.b = best_response_to(instance, p, one);
    const std::array<Resource, 2> two{t.a, t.b};
    t.c = best_response_to(instance, p, two);
  }
  return out;
}

StrategyProfile sweep_assignment(const GameInstance& instance,
                                 SweepStart start,
                                 const LoopRelabeling& relabeling) {
  const auto order = cycle_order(instance.graph());
  const auto triples = loop_type_triples(instance);
  for (PlayerId p = 0; p < triples.size(); ++p) {
    if (triples[p].a == triples[p].b) {
      throw InputError("player " + std::to_string(p) +
                       " has equal first and second choices");
    }
  }
  if (relabeling.offset >= order.size()) {
    throw InputError("relabeling offset out of range");
  }
  const auto at = positions(order, relabeling);
  return to_profile(at, sweep(triples, at, start));
}

ConstructionReport construct_loop_ne(const GameInstance& instance) {
  const auto order = cycle_order(instance.graph());
  require_non_increasing(instance);
  const auto triples = loop_type_triples(instance);
  const std::size_t n = order.size();
  for (std::size_t pos = 0; pos < n; ++pos) {
    const TypeTriple& t = triples[order[pos]];
    if (t.a == t.b) {
      return loop_with_pinned_player(instance, order, triples, pos);
    }
  }
  for (std::size_t pos = 0; pos < n; ++pos) {
    const TypeTriple& t = triples[order[pos]];
    if (t.c != t.a && t.c != t.b) {
      return loop_with_three_distinct(instance, order, triples, pos);
    }
  }
  return loop_with_two_choice_types(instance, order, triples);
}

ConstructionReport construct_bipartite_ne(const GameInstance& instance) {
  require_undirected(instance, "bipartite");
  const auto split = regular_bipartition(instance.graph());
  if (!split) {
    throw InputError("bipartite construction needs a regular bipartite graph");
  }
  if (!is_non_user_specific(instance)) {
    throw InputError("bipartite construction needs payoffs shared by all players");
  }
  require_non_increasing(instance);

  std::vector<Resource> ranked(instance.resource_count());
  for (std::size_t r = 0; r < ranked.size(); ++r) {
    ranked[r] = static_cast<Resource>(r + 1);
  }
  std::stable_sort(ranked.begin(), ranked.end(), [&](Resource x, Resource y) {
    return instance.value(0, x, 1) > instance.value(0, y, 1);
  });
  const Resource top = ranked[0];
  const std::size_t d = split->degree;
  if (ranked.size() == 1 ||
      instance.value(0, top, d + 1) >= instance.value(0, ranked[1], 1)) {
    return finish(instance, StrategyProfile(instance.player_count(), top),
                  "bipartite:dominant",
                  {"resource " + std::to_string(top) + " dominates at degree " +
                   std::to_string(d)});
  }
  const Resource second = ranked[1];
  StrategyProfile profile(instance.player_count(), top);
  for (PlayerId p = 0; p < instance.player_count(); ++p) {
    if (split->side[p] == 1) profile[p] = second;
  }
  return finish(instance, std::move(profile), "bipartite:two-coloring",
                {"sides on resources " + std::to_string(top) + " and " +
                 std::to_string(second)});
}

std::optional<Resource> find_dominant_resource(const GameInstance& instance) {
  const std::size_t worst = instance.graph().max_degree() + 1;
  for (std::size_t r = 1; r <= instance.resource_count(); ++r) {
    const auto res = static_cast<Resource>(r);
    bool dominant = true;
    for (PlayerId p = 0; p < instance.player_count() && dominant; ++p) {
      const Rational& crowded = instance.value(p, res, worst);
      for (std::size_t other = 1; other <= instance.resource_count(); ++other) {
        if (other == r) continue;
        if (crowded < instance.value(p, static_cast<Resource>(other), 1)) {
          dominant = false;
          break;
        }
      }
    }
    if (dominant) return res;
  }
  return std::nullopt;
}

ConstructionReport construct_dominant_ne(const GameInstance& instance) {
  const auto r = find_dominant_resource(instance);
  if (!r) throw InputError("no dominant resource");
  return finish(instance, StrategyProfile(instance.player_count(), *r),
                "dominant", {"all players on resource " + std::to_string(*r)});
}

}  // namespace scg

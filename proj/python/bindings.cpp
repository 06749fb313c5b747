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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "scg/constructions.hpp"
#include "scg/counterexamples.hpp"
#include "scg/dynamics.hpp"
#include "scg/equilibrium.hpp"
#include "scg/errors.hpp"
#include "scg/generate.hpp"
#include "scg/io.hpp"
#include "scg/potentials.hpp"

namespace py = pybind11;

namespace scg {
namespace {

// Profiles cross the boundary as lists of 1-based resources.
StrategyProfile profile_of(const std::vector<Resource>& choices) {
  return StrategyProfile(choices);
}

std::string rational_text(const Rational& r) { return to_string(r); }

Mode mode_of(const std::string& mode) {
  if (mode == "better") return Mode::kBetterResponse;
  if (mode == "best") return Mode::kBestResponse;
  throw InputError("mode must be \"better\" or \"best\"");
}

py::dict dynamics(const GameInstance& g, const std::vector<Resource>& start,
                  const std::string& scheduler, const std::string& mode,
                  std::uint64_t seed, std::size_t max_steps) {
  DynamicsOptions o;
  if (scheduler == "round-robin") {
    o.scheduler = SchedulerKind::kRoundRobin;
  } else if (scheduler == "random") {
    o.scheduler = SchedulerKind::kRandom;
  } else {
    throw InputError("scheduler must be \"round-robin\" or \"random\"");
  }
  o.mode = mode_of(mode);
  o.seed = seed;
  o.max_steps = max_steps;
  const DynamicsResult r = run_dynamics(g, profile_of(start), o);
  py::dict out;
  out["status"] = to_string(r.status);
  out["steps"] = r.trace.steps.size();
  out["final"] = r.trace.final_state().choices();
  out["cycle_period"] = r.cycle_period;
  out["trace"] = serialize_trace(make_trace_document(g, o, r));
  return out;
}

py::dict scan(const GameInstance& g, const std::string& mode,
              std::optional<std::vector<PlayerId>> free_players,
              std::optional<std::vector<Resource>> base) {
  std::optional<ScanScope> scope;
  if (free_players) {
    scope = ScanScope{*free_players,
                      base ? profile_of(*base)
                           : StrategyProfile(g.player_count(), 1)};
  }
  const FipVerdict v =
      fip_scan(g, mode_of(mode), default_profile_cap(), scope);
  py::dict out;
  out["acyclic"] = v.acyclic;
  out["states"] = v.states_explored;
  out["edges"] = v.improvement_edges;
  if (v.witness_cycle) {
    py::list moves;
    for (const auto& s : v.witness_cycle->steps) {
      moves.append(py::make_tuple(s.mover, s.from, s.to));
    }
    out["witness_start"] = v.witness_cycle->initial.choices();
    out["witness"] = moves;
  } else {
    out["witness_start"] = py::none();
    out["witness"] = py::none();
  }
  return out;
}

py::dict construct(const GameInstance& g, const std::string& family) {
  ConstructionReport r;
  if (family == "tree") {
    r = construct_tree_ne(g);
  } else if (family == "loop") {
    r = construct_loop_ne(g);
  } else if (family == "bipartite") {
    r = construct_bipartite_ne(g);
  } else if (family == "dominant") {
    r = construct_dominant_ne(g);
  } else {
    throw InputError("unknown family \"" + family + "\"");
  }
  py::dict out;
  out["profile"] = r.profile.choices();
  out["method"] = r.method;
  out["verified"] = r.verified;
  out["notes"] = r.notes;
  return out;
}

py::dict counterexample(const std::string& name) {
  const auto which = parse_counterexample_name(name);
  if (!which) throw InputError("unknown counterexample \"" + name + "\"");
  const CanonicalInstance c = build_counterexample(*which);
  const CounterexampleReport r = verify_counterexample(c);
  py::dict out;
  out["name"] = to_string(c.name);
  out["instance"] = c.instance;
  out["passed"] = r.pass;
  out["summary"] = r.summary;
  out["diagnostics"] = r.diagnostics;
  out["nash_count"] = r.nash_count;
  out["profiles_checked"] = r.profiles_checked;
  if (c.name == CounterexampleName::kThreeColorCycle) {
    out["loop_start"] = c.loop_start.choices();
  }
  return out;
}

GameInstance generate(const std::string& family, std::size_t players,
                      std::size_t resources, std::uint64_t seed,
                      std::size_t degree, bool identical_resources,
                      bool non_user_specific, std::int64_t max_value) {
  GeneratorOptions o;
  o.family = parse_graph_family(family);
  o.players = players;
  o.resources = resources;
  o.seed = seed;
  o.degree = degree;
  o.payoffs.identical_resources = identical_resources;
  o.payoffs.non_user_specific = non_user_specific;
  o.payoffs.max_value = max_value;
  return generate_instance(o);
}

}  // namespace
}  // namespace scg

PYBIND11_MODULE(_core, m) {
  using namespace scg;
  m.doc() = "Spatial congestion games: equilibria, dynamics and FIP checks.";

  static py::exception<ResourceLimitError> limit(m, "ResourceLimitError",
                                                 PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ResourceLimitError& e) {
      py::set_error(limit, e.what());
    } catch (const InputError& e) {
      py::set_error(PyExc_ValueError, e.what());
    } catch (const BuildError& e) {
      py::set_error(PyExc_RuntimeError, e.what());
    }
  });

  py::class_<GameInstance>(m, "Instance")
      .def_static("from_json", &parse_instance, py::arg("text"))
      .def("to_json", &serialize_instance)
      .def_property_readonly("digest", &instance_digest)
      .def_property_readonly("players", &GameInstance::player_count)
      .def_property_readonly("resources", &GameInstance::resource_count)
      .def_property_readonly(
          "edges", [](const GameInstance& g) { return g.graph().edges(); })
      .def_property_readonly(
          "directed", [](const GameInstance& g) { return g.graph().directed(); })
      .def(
          "payoff",
          [](const GameInstance& g, const std::vector<Resource>& s,
             PlayerId p) { return rational_text(payoff(g, profile_of(s), p)); },
          py::arg("profile"), py::arg("player"))
      .def(
          "best_response",
          [](const GameInstance& g, const std::vector<Resource>& s,
             PlayerId p) { return best_response(g, profile_of(s), p); },
          py::arg("profile"), py::arg("player"))
      .def(
          "is_nash",
          [](const GameInstance& g, const std::vector<Resource>& s) {
            const NashCheck c = is_nash(g, profile_of(s));
            return py::make_tuple(c.is_nash, c.deviators);
          },
          py::arg("profile"))
      .def("enumerate_nash",
           [](const GameInstance& g) {
             std::vector<std::vector<Resource>> out;
             for (const auto& s : enumerate_nash(g)) out.push_back(s.choices());
             return out;
           })
      .def(
          "rosenthal_potential",
          [](const GameInstance& g, const std::vector<Resource>& s) {
            return rational_text(rosenthal_potential(g, profile_of(s)));
          },
          py::arg("profile"))
      .def(
          "edge_potential",
          [](const GameInstance& g, const std::vector<Resource>& s) {
            return edge_potential(g, profile_of(s));
          },
          py::arg("profile"))
      .def("__eq__", [](const GameInstance& a, const GameInstance& b) {
        return a == b;
      })
      .def("__repr__", [](const GameInstance& g) {
        return "<Instance players=" + std::to_string(g.player_count()) +
               " resources=" + std::to_string(g.resource_count()) + ">";
      });

  m.def("run_dynamics", &dynamics, py::arg("instance"), py::arg("start"),
        py::arg("scheduler") = "round-robin", py::arg("mode") = "better",
        py::arg("seed") = 0, py::arg("max_steps") = 10000);
  m.def("fip_scan", &scan, py::arg("instance"), py::arg("mode") = "better",
        py::arg("free_players") = py::none(), py::arg("base") = py::none());
  m.def("construct", &construct, py::arg("instance"), py::arg("family"));
  m.def("counterexample", &counterexample, py::arg("name"));
  m.def("generate", &generate, py::arg("family"), py::arg("players"),
        py::arg("resources"), py::arg("seed") = 0, py::arg("degree") = 2,
        py::arg("identical_resources") = false,
        py::arg("non_user_specific") = false, py::arg("max_value") = 20);
  m.def(
      "replay_trace",
      [](const GameInstance& g, const std::string& text) {
        return replay_trace(g, parse_trace(text));
      },
      py::arg("instance"), py::arg("trace"));
}

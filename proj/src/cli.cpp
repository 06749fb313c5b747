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


#include "scg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "scg/constructions.hpp"
#include "scg/counterexamples.hpp"
#include "scg/dynamics.hpp"
#include "scg/equilibrium.hpp"
#include "scg/errors.hpp"
#include "scg/generate.hpp"
#include "scg/io.hpp"

namespace scg {
namespace {

// Unreadable, unwritable or malformed files.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw FileError("cannot write " + path);
}

GameInstance load_instance(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_instance(text);
  } catch (const ParseError& e) {
    throw FileError(path + ": " + e.what());
  }
}

std::vector<PlayerId> parse_players(const std::string& text) {
  std::vector<PlayerId> out;
  std::stringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) {
      throw InputError("bad player list \"" + text + "\"");
    }
    out.push_back(v);
  }
  return out;
}

void print_trace_rows(const ImprovementTrace& trace, std::ostream& out) {
  for (const ImprovementStep& s : trace.steps) {
    out << "t=" << s.time << " player " << s.mover << ": " << s.from << " -> "
        << s.to << " (" << to_string(s.payoff_before) << " -> "
        << to_string(s.payoff_after) << ")\n";
  }
}

struct Args {
  std::string instance;
  std::string profile;
  std::string scheduler = "round-robin";
  std::string schedule;
  std::string mode = "better";
  std::uint64_t seed = 0;
  std::size_t max_steps = 10'000;
  std::string trace;
  std::string free_players;
  std::string base;
  std::string family;
  std::string name;
  std::string emit;
  std::size_t resources_override = 3;
  GeneratorOptions gen;
};

Mode parse_mode(const std::string& text) {
  return text == "best" ? Mode::kBestResponse : Mode::kBetterResponse;
}

int cmd_check_ne(const Args& a, std::ostream& out) {
  const GameInstance instance = load_instance(a.instance);
  const StrategyProfile profile = parse_profile(a.profile);
  validate_profile(instance, profile);
  const NashCheck check = is_nash(instance, profile);
  out << (check.is_nash ? "NE" : "NOT NE") << "\n";
  out << "payoffs:";
  for (PlayerId p = 0; p < instance.player_count(); ++p) {
    out << (p == 0 ? " " : ",") << to_string(payoff(instance, profile, p));
  }
  out << "\n";
  if (!check.is_nash) {
    out << "deviators:";
    for (std::size_t k = 0; k < check.deviators.size(); ++k) {
      out << (k == 0 ? " " : ",") << check.deviators[k];
    }
    out << "\n";
  }
  return check.is_nash ? kExitOk : kExitFailed;
}

int cmd_brute_ne(const Args& a, std::ostream& out) {
  const GameInstance instance = load_instance(a.instance);
  const auto nash = enumerate_nash(instance);
  for (const auto& p : nash) out << to_string(p) << "\n";
  out << "count: " << nash.size() << "\n";
  return kExitOk;
}

int cmd_dynamics(const Args& a, std::ostream& out) {
  const GameInstance instance = load_instance(a.instance);
  DynamicsOptions options;
  options.mode = parse_mode(a.mode);
  options.seed = a.seed;
  options.max_steps = a.max_steps;
  if (a.scheduler == "random") {
    options.scheduler = SchedulerKind::kRandom;
  } else if (a.scheduler == "file") {
    options.scheduler = SchedulerKind::kExplicit;
    if (a.schedule.empty()) {
      throw InputError("--scheduler file needs --schedule FILE");
    }
    try {
      options.schedule = parse_schedule(read_file(a.schedule));
    } catch (const ParseError& e) {
      throw FileError(a.schedule + ": " + e.what());
    }
  }
  const StrategyProfile start =
      a.profile.empty() ? StrategyProfile(instance.player_count(), 1)
                        : parse_profile(a.profile);
  validate_profile(instance, start);
  const DynamicsResult result = run_dynamics(instance, start, options);
  const std::string document =
      serialize_trace(make_trace_document(instance, options, result));
  if (a.trace.empty()) {
    out << document;
  } else {
    write_file(a.trace, document);
    out << "status: " << to_string(result.status) << "\n"
        << "steps: " << result.trace.steps.size() << "\n"
        << "final: " << to_string(result.trace.final_state()) << "\n";
    if (result.cycle_period) out << "period: " << *result.cycle_period << "\n";
  }
  switch (result.status) {
    case TerminalStatus::kConvergedToNash:
      return kExitOk;
    case TerminalStatus::kCycleDetected:
      return kExitCycle;
    case TerminalStatus::kStepLimit:
      return kExitStepLimit;
  }
  return kExitFailed;
}

int cmd_fip_scan(const Args& a, std::ostream& out) {
  const GameInstance instance = load_instance(a.instance);
  std::optional<ScanScope> scope;
  if (!a.free_players.empty()) {
    ScanScope s;
    s.free_players = parse_players(a.free_players);
    s.base = a.base.empty() ? StrategyProfile(instance.player_count(), 1)
                            : parse_profile(a.base);
    validate_profile(instance, s.base);
    scope = std::move(s);
  } else if (!a.base.empty()) {
    throw InputError("--base needs --free");
  }
  const FipVerdict verdict =
      fip_scan(instance, parse_mode(a.mode), default_profile_cap(), scope);
  if (verdict.acyclic) {
    out << "ACYCLIC\n";
  } else {
    out << "CYCLE of length " << verdict.witness_cycle->steps.size()
        << " from " << to_string(verdict.witness_cycle->initial) << "\n";
    print_trace_rows(*verdict.witness_cycle, out);
  }
  out << "states: " << verdict.states_explored
      << " edges: " << verdict.improvement_edges << "\n";
  return verdict.acyclic ? kExitOk : kExitCycle;
}

int cmd_construct(const Args& a, std::ostream& out, std::ostream& err) {
  const GameInstance instance = load_instance(a.instance);
  ConstructionReport report;
  try {
    if (a.family == "tree") {
      report = construct_tree_ne(instance);
    } else if (a.family == "loop") {
      report = construct_loop_ne(instance);
    } else if (a.family == "bipartite") {
      report = construct_bipartite_ne(instance);
    } else {
      report = construct_dominant_ne(instance);
    }
  } catch (const InputError& e) {
    err << "not applicable: " << e.what() << "\n";
    return kExitInapplicable;
  }
  out << "profile: " << to_string(report.profile) << "\n"
      << "method: " << report.method << "\n"
      << "verified: " << (report.verified ? "true" : "false") << "\n";
  for (const auto& note : report.notes) out << "note: " << note << "\n";
  return report.verified ? kExitOk : kExitFailed;
}

int cmd_counterexample(const Args& a, std::ostream& out) {
  const auto name = parse_counterexample_name(a.name);
  if (!name) throw InputError("unknown counterexample \"" + a.name + "\"");
  const CanonicalInstance c =
      *name == CounterexampleName::kThreeColorCycle
          ? build_three_color_cycle(a.resources_override)
          : build_counterexample(*name);
  if (!a.emit.empty()) write_file(a.emit, serialize_instance(c.instance));
  const CounterexampleReport report = verify_counterexample(c);
  out << to_string(*name) << ": " << (report.pass ? "PASS" : "FAIL") << " ("
      << report.summary << ")\n";
  if (c.name == CounterexampleName::kThreeColorCycle) {
    out << "start: " << to_string(c.loop_start) << "\n";
  }
  for (const auto& line : report.diagnostics) out << "  " << line << "\n";
  return report.pass ? kExitOk : kExitFailed;
}

int cmd_gen(const Args& a, std::ostream& out) {
  GeneratorOptions options = a.gen;
  options.family = parse_graph_family(a.family);
  out << serialize_instance(generate_instance(options));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Spatial congestion game workbench", "scg"};
  app.require_subcommand(1);
  Args a;

  const std::vector<std::string> modes = {"better", "best"};

  auto* check = app.add_subcommand("check-ne", "Check a profile for NE");
  check->add_option("-i,--instance", a.instance, "Instance JSON")->required();
  check->add_option("-p,--profile", a.profile, "Profile, e.g. 1,2,1")
      ->required();

  auto* brute = app.add_subcommand("brute-ne", "List every pure NE");
  brute->add_option("-i,--instance", a.instance, "Instance JSON")->required();

  auto* dyn = app.add_subcommand("dynamics", "Run improvement dynamics");
  dyn->add_option("-i,--instance", a.instance, "Instance JSON")->required();
  dyn->add_option("--start", a.profile, "Start profile (default all 1)");
  dyn->add_option("--scheduler", a.scheduler)
      ->check(CLI::IsMember({"round-robin", "random", "file"}));
  dyn->add_option("--schedule", a.schedule,
                  "Schedule file for --scheduler file");
  dyn->add_option("--mode", a.mode)->check(CLI::IsMember(modes));
  dyn->add_option("--seed", a.seed);
  dyn->add_option("--max-steps", a.max_steps);
  dyn->add_option("--trace", a.trace, "Write the trace document here");

  auto* fip = app.add_subcommand("fip-scan", "Search the improvement graph");
  fip->add_option("-i,--instance", a.instance, "Instance JSON")->required();
  fip->add_option("--mode", a.mode)->check(CLI::IsMember(modes));
  fip->add_option("--free", a.free_players,
                  "Scan only these players, e.g. 0,1,2");
  fip->add_option("--base", a.base, "Profile holding the other players");

  auto* cons = app.add_subcommand("construct", "Construct an NE");
  cons->add_option("-i,--instance", a.instance, "Instance JSON")->required();
  cons->add_option("--family", a.family)
      ->required()
      ->check(CLI::IsMember({"tree", "loop", "bipartite", "dominant"}));

  auto* counter = app.add_subcommand("counterexample",
                                     "Verify a built-in counterexample");
  counter->add_option("--name", a.name)
      ->required()
      ->check(CLI::IsMember({"three-color", "non-monotonic", "directed"}));
  counter->add_option("--emit", a.emit, "Write the instance JSON here");
  counter->add_option("--resources", a.resources_override,
                      "Resource count for three-color (>= 3)");

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--family", a.family)
      ->required()
      ->check(CLI::IsMember({"tree", "loop", "bipartite", "random"}));
  gen->add_option("-n,--players", a.gen.players)->required();
  gen->add_option("-r,--resources", a.gen.resources)->required();
  gen->add_option("--seed", a.gen.seed);
  gen->add_option("--degree", a.gen.degree, "Bipartite degree");
  gen->add_option("--max-value", a.gen.payoffs.max_value);
  gen->add_flag("--identical-resources", a.gen.payoffs.identical_resources);
  gen->add_flag("--non-user-specific", a.gen.payoffs.non_user_specific);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check_ne(a, out);
    if (brute->parsed()) return cmd_brute_ne(a, out);
    if (dyn->parsed()) return cmd_dynamics(a, out);
    if (fip->parsed()) return cmd_fip_scan(a, out);
    if (cons->parsed()) return cmd_construct(a, out, err);
    if (counter->parsed()) return cmd_counterexample(a, out);
    if (gen->parsed()) return cmd_gen(a, out);
  } catch (const FileError& e) {
    err << "file error: " << e.what() << "\n";
    return kExitFileError;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResourceLimit;
  } catch (const InputError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BuildError& e) {
    err << "build error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace scg

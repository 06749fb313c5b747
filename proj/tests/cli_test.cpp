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


#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "scg/cli.hpp"
#include "scg/counterexamples.hpp"
#include "scg/io.hpp"
#include "test_util.hpp"

namespace scg {
namespace {

namespace fs = std::filesystem;
using testing::seq;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("scg_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"gen", "--family", "tree"}).code == kExitUsage);
  CHECK(cli({"gen", "--family", "star", "-n", "3", "-r", "2"}).code ==
        kExitUsage);
  CHECK(cli({"gen", "--family", "loop", "-n", "2", "-r", "2"}).code ==
        kExitUsage);
  CHECK(cli({"counterexample", "--name", "four-color"}).code == kExitUsage);
  const Run help = cli({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("fip-scan") != std::string::npos);
}

TEST_CASE("file errors") {
  TempDir dir;
  CHECK(cli({"brute-ne", "-i", dir.path("missing.json")}).code ==
        kExitFileError);
  const std::string junk = dir.file("junk.json", "{\"players\": ");
  const Run r = cli({"brute-ne", "-i", junk});
  CHECK(r.code == kExitFileError);
  CHECK(r.err.find("junk.json") != std::string::npos);
  const std::string bad = dir.file(
      "bad.json", R"({"schema_version": 1, "players": 2, "resources": 1,
        "directed": false, "monotone": true, "edges": [[0, 0]],
        "payoffs": [[["1", "1"]], [["1", "1"]]]})");
  CHECK(cli({"brute-ne", "-i", bad}).code == kExitFileError);
}

TEST_CASE("gen is deterministic and parses back") {
  const std::vector<std::string> args = {"gen", "--family", "loop", "-n", "5",
                                         "-r", "3", "--seed", "7"};
  const Run a = cli(args);
  const Run b = cli(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  const GameInstance g = parse_instance(a.out);
  CHECK(g.player_count() == 5);
  CHECK(g.resource_count() == 3);

  const Run single = cli({"gen", "--family", "tree", "-n", "1", "-r", "4"});
  CHECK(single.code == kExitOk);
  CHECK(parse_instance(single.out).player_count() == 1);

  const Run flat = cli({"gen", "--family", "random", "-n", "5", "-r", "3",
                        "--identical-resources", "--seed", "3"});
  CHECK(has_identical_resources(parse_instance(flat.out)));
  const Run shared_tables = cli({"gen", "--family", "bipartite", "-n", "6",
                                 "-r", "3", "--degree", "2",
                                 "--non-user-specific"});
  CHECK(is_non_user_specific(parse_instance(shared_tables.out)));
}

TEST_CASE("check-ne and brute-ne") {
  TempDir dir;
  const std::string nm = dir.file(
      "nm.json", serialize_instance(build_non_monotonic().instance));
  const Run r = cli({"check-ne", "-i", nm, "-p", "1,1,1"});
  CHECK(r.code == kExitFailed);
  CHECK(r.out.rfind("NOT NE\n", 0) == 0);
  CHECK(r.out.find("payoffs: 5,5,3") != std::string::npos);
  CHECK(r.out.find("deviators:") != std::string::npos);
  CHECK(cli({"check-ne", "-i", nm, "-p", "1,1"}).code == kExitUsage);
  CHECK(cli({"check-ne", "-i", nm, "-p", "1,x,1"}).code == kExitUsage);

  const Run none = cli({"brute-ne", "-i", nm});
  CHECK(none.code == kExitOk);
  CHECK(none.out == "count: 0\n");

  const std::string pair = dir.file(
      "pair.json", serialize_instance(testing::shared(
                       2, {{0, 1}}, {seq({5, 1}), seq({4, 2})})));
  const Run ne = cli({"check-ne", "-i", pair, "-p", "1,2"});
  CHECK(ne.code == kExitOk);
  CHECK(ne.out.rfind("NE\n", 0) == 0);
  CHECK(cli({"brute-ne", "-i", pair}).out == "1,2\n2,1\ncount: 2\n");
}

TEST_CASE("dynamics") {
  TempDir dir;
  const Run gen = cli({"gen", "--family", "random", "-n", "6", "-r", "2",
                       "--seed", "11"});
  const std::string inst = dir.file("g.json", gen.out);
  const std::vector<std::string> args = {"dynamics",  "-i",     inst,
                                         "--scheduler", "random", "--seed",
                                         "5"};
  const Run a = cli(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == cli(args).out);
  const GameInstance g = parse_instance(gen.out);
  CHECK(replay_trace(g, parse_trace(a.out)) == "");

  const std::string out = dir.path("trace.json");
  const Run to_file = cli({"dynamics", "-i", inst, "--mode", "best",
                           "--trace", out});
  CHECK(to_file.code == kExitOk);
  CHECK(to_file.out.rfind("status: converged_to_ne", 0) == 0);
  CHECK(replay_trace(g, parse_trace(slurp(out))) == "");

  CHECK(cli({"dynamics", "-i", inst, "--start", "1,1"}).code == kExitUsage);
  CHECK(cli({"dynamics", "-i", inst, "--mode", "worst"}).code == kExitUsage);
  CHECK(cli({"dynamics", "-i", inst, "--scheduler", "file"}).code ==
        kExitUsage);

  const std::string pair = dir.file(
      "pair.json", serialize_instance(testing::shared(
                       2, {{0, 1}}, {seq({5, 1}), seq({4, 2})})));
  CHECK(cli({"dynamics", "-i", pair, "--max-steps", "0"}).code ==
        kExitStepLimit);
}

TEST_CASE("dynamics with a schedule file finds the three-color loop") {
  TempDir dir;
  const CanonicalInstance c = build_three_color_cycle();
  const std::string inst = dir.file("c.json", serialize_instance(c.instance));
  std::string schedule = "# core loop\n";
  for (const auto& m : c.loop_schedule) {
    schedule += std::to_string(m.player) + " " + std::to_string(*m.target) +
                "\n";
  }
  const std::string sched = dir.file("loop.txt", schedule);
  const Run r = cli({"dynamics", "-i", inst, "--scheduler", "file",
                     "--schedule", sched, "--start", to_string(c.loop_start),
                     "--trace", dir.path("t.json")});
  CHECK(r.code == kExitCycle);
  CHECK(r.out.find("period: 11") != std::string::npos);

  const std::string broken = dir.file("broken.txt", "0 1\n0 x\n");
  const Run b = cli({"dynamics", "-i", inst, "--scheduler", "file",
                     "--schedule", broken});
  CHECK(b.code == kExitFileError);
  CHECK(b.err.find("line 2") != std::string::npos);
}

TEST_CASE("fip-scan") {
  TempDir dir;
  const Run gen = cli({"gen", "--family", "random", "-n", "5", "-r", "2",
                       "--seed", "4"});
  const std::string two = dir.file("two.json", gen.out);
  const Run acyclic = cli({"fip-scan", "-i", two});
  CHECK(acyclic.code == kExitOk);
  CHECK(acyclic.out.rfind("ACYCLIC\n", 0) == 0);

  const std::string nm = dir.file(
      "nm.json", serialize_instance(build_non_monotonic().instance));
  const Run cyc = cli({"fip-scan", "-i", nm});
  CHECK(cyc.code == kExitCycle);
  CHECK(cyc.out.rfind("CYCLE of length", 0) == 0);

  const CanonicalInstance c = build_three_color_cycle();
  const std::string three =
      dir.file("three.json", serialize_instance(c.instance));
  const Run scoped = cli({"fip-scan", "-i", three, "--free", "0,1,2,3",
                          "--base", to_string(c.loop_start)});
  CHECK(scoped.code == kExitCycle);
  CHECK(scoped.out.find("states: 81") != std::string::npos);
  CHECK(cli({"fip-scan", "-i", three}).code == kExitResourceLimit);
  CHECK(cli({"fip-scan", "-i", three, "--base", "1"}).code == kExitUsage);
}

TEST_CASE("construct") {
  TempDir dir;
  const std::string cube = dir.file(
      "cube.json",
      serialize_instance(testing::shared(
          8, testing::cube_edges(), {seq({10, 1, 1, 1}), seq({6, 5, 4, 3})})));
  const Run r = cli({"construct", "-i", cube, "--family", "bipartite"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("method: bipartite:two-coloring") != std::string::npos);
  CHECK(r.out.find("verified: true") != std::string::npos);
  const Run tree = cli({"construct", "-i", cube, "--family", "tree"});
  CHECK(tree.code == kExitInapplicable);
  CHECK(tree.err.find("not applicable") != std::string::npos);
  CHECK(cli({"construct", "-i", cube, "--family", "dominant"}).code ==
        kExitInapplicable);
  CHECK(cli({"construct", "-i", cube, "--family", "grid"}).code == kExitUsage);

  const Run loop_gen = cli({"gen", "--family", "loop", "-n", "7", "-r", "3",
                            "--seed", "2"});
  const std::string loop = dir.file("loop.json", loop_gen.out);
  CHECK(cli({"construct", "-i", loop, "--family", "loop"}).code == kExitOk);
}

TEST_CASE("counterexample") {
  TempDir dir;
  const Run nm = cli({"counterexample", "--name", "non-monotonic"});
  CHECK(nm.code == kExitOk);
  CHECK(nm.out.rfind("non-monotonic: PASS (0 NE / 8 profiles)", 0) == 0);
  const Run three = cli({"counterexample", "--name", "three-color", "--emit",
                         dir.path("three.json")});
  CHECK(three.code == kExitOk);
  CHECK(three.out.find("11/11 improving steps") != std::string::npos);
  CHECK(parse_instance(slurp(dir.path("three.json"))) ==
        build_three_color_cycle().instance);
  const Run directed = cli({"counterexample", "--name", "directed"});
  CHECK(directed.code == kExitOk);
  CHECK(directed.out.find("0 NE / 81 profiles") != std::string::npos);
  CHECK(cli({"counterexample", "--name", "three-color", "--resources", "4"})
            .code == kExitOk);
}

}  // namespace
}  // namespace scg

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


#include "scg/io.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "scg/errors.hpp"

namespace scg {
namespace {

using nlohmann::json;

std::string pointer(const std::string& base, std::size_t index) {
  return base + "/" + std::to_string(index);
}

const json& field(const json& object, const std::string& path,
                  const char* key) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw ParseError(path.empty() ? "/" : path,
                     std::string("missing field \"") + key + "\"");
  }
  return *it;
}

void reject_unknown(const json& object, const std::string& path,
                    std::initializer_list<std::string_view> allowed) {
  for (const auto& item : object.items()) {
    bool known = false;
    for (std::string_view k : allowed) known = known || item.key() == k;
    if (!known) {
      throw ParseError(path + "/" + item.key(), "unknown field");
    }
  }
}

std::uint64_t as_unsigned(const json& value, const std::string& path) {
  if (value.is_number_unsigned()) return value.get<std::uint64_t>();
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
    throw ParseError(path, "expected a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

bool as_bool(const json& value, const std::string& path) {
  if (!value.is_boolean()) throw ParseError(path, "expected true or false");
  return value.get<bool>();
}

const json& as_array(const json& value, const std::string& path) {
  if (!value.is_array()) throw ParseError(path, "expected an array");
  return value;
}

Rational as_rational(const json& value, const std::string& path) {
  try {
    if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
    if (value.is_string()) return parse_rational(value.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(path, e.what());
  }
  throw ParseError(path, "expected an integer or a \"p/q\" string");
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed JSON");
  }
}

StrategyProfile as_profile(const json& value, const std::string& path) {
  if (!value.is_string()) throw ParseError(path, "expected a profile string");
  try {
    return parse_profile(value.get<std::string>());
  } catch (const InputError& e) {
    throw ParseError(path, e.what());
  }
}

std::string hex64(std::uint64_t value) {
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx",
                static_cast<unsigned long long>(value));
  return buffer;
}

}  // namespace

GameInstance parse_instance(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("/", "expected an object");
  reject_unknown(doc, "",
                 {"schema_version", "players", "resources", "directed",
                  "edges", "payoffs", "monotone", "preferences"});
  const auto version = as_unsigned(field(doc, "", "schema_version"),
                                   "/schema_version");
  if (version != kSchemaVersion) {
    throw ParseError("/schema_version",
                     "unsupported version " + std::to_string(version));
  }
  const std::size_t n = as_unsigned(field(doc, "", "players"), "/players");
  const std::size_t r =
      as_unsigned(field(doc, "", "resources"), "/resources");
  if (n == 0) throw ParseError("/players", "need at least one player");
  if (r == 0) throw ParseError("/resources", "need at least one resource");
  const bool directed = as_bool(field(doc, "", "directed"), "/directed");
  const bool monotone = as_bool(field(doc, "", "monotone"), "/monotone");

  std::vector<Edge> edges;
  const json& raw_edges = as_array(field(doc, "", "edges"), "/edges");
  for (std::size_t k = 0; k < raw_edges.size(); ++k) {
    const std::string path = pointer("/edges", k);
    const json& e = raw_edges[k];
    if (!e.is_array() || e.size() != 2) {
      throw ParseError(path, "expected a pair [i, j]");
    }
    const auto u = as_unsigned(e[0], path + "/0");
    const auto v = as_unsigned(e[1], path + "/1");
    if (u == v) throw ParseError(path, "self-loop");
    if (u >= n || v >= n) throw ParseError(path, "player out of range");
    edges.emplace_back(u, v);
  }
  InterferenceGraph graph(
      n, edges, directed ? Directedness::kDirected : Directedness::kUndirected);

  const json& raw_payoffs = as_array(field(doc, "", "payoffs"), "/payoffs");
  if (raw_payoffs.size() != n) {
    throw ParseError("/payoffs", "expected one entry per player");
  }
  std::vector<std::vector<PayoffTable::Sequence>> values(n);
  for (PlayerId i = 0; i < n; ++i) {
    const std::string ipath = pointer("/payoffs", i);
    const json& per_player = as_array(raw_payoffs[i], ipath);
    if (per_player.size() != r) {
      throw ParseError(ipath, "expected one sequence per resource");
    }
    for (std::size_t res = 0; res < r; ++res) {
      const std::string rpath = pointer(ipath, res);
      const json& seq = as_array(per_player[res], rpath);
      if (seq.size() < graph.degree(i) + 1) {
        throw ParseError(rpath, "needs at least " +
                                    std::to_string(graph.degree(i) + 1) +
                                    " entries (interference set size + 1)");
      }
      PayoffTable::Sequence out;
      for (std::size_t k = 0; k < seq.size(); ++k) {
        out.push_back(as_rational(seq[k], pointer(rpath, k)));
        if (monotone && k > 0 && out[k] > out[k - 1]) {
          throw ParseError(pointer(rpath, k),
                           "increases although monotone is asserted");
        }
      }
      values[i].push_back(std::move(out));
    }
  }

  std::vector<std::vector<Resource>> prefs;
  if (auto it = doc.find("preferences"); it != doc.end()) {
    const json& raw = as_array(*it, "/preferences");
    if (raw.size() != n) {
      throw ParseError("/preferences", "expected one order per player");
    }
    for (PlayerId i = 0; i < n; ++i) {
      const std::string ipath = pointer("/preferences", i);
      std::vector<Resource> order;
      for (std::size_t k = 0; k < as_array(raw[i], ipath).size(); ++k) {
        order.push_back(
            static_cast<Resource>(as_unsigned(raw[i][k], pointer(ipath, k))));
      }
      prefs.push_back(std::move(order));
    }
  }
  const char* blame = prefs.empty() ? "/payoffs" : "/preferences";
  try {
    return GameInstance(std::move(graph), r,
                        PayoffTable(std::move(values), monotone),
                        std::move(prefs));
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(blame, e.what());
  }
}

std::string serialize_instance(const GameInstance& instance) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["players"] = instance.player_count();
  doc["resources"] = instance.resource_count();
  doc["directed"] = instance.graph().directed();
  doc["monotone"] = instance.payoffs().monotone_asserted();
  json edges = json::array();
  for (const auto& [u, v] : instance.graph().edges()) {
    edges.push_back({u, v});
  }
  doc["edges"] = std::move(edges);
  json payoffs = json::array();
  for (const auto& per_player : instance.payoffs().raw()) {
    json row = json::array();
    for (const auto& seq : per_player) {
      json entries = json::array();
      for (const Rational& v : seq) entries.push_back(to_string(v));
      row.push_back(std::move(entries));
    }
    payoffs.push_back(std::move(row));
  }
  doc["payoffs"] = std::move(payoffs);
  if (!instance.default_preferences()) {
    json prefs = json::array();
    for (PlayerId p = 0; p < instance.player_count(); ++p) {
      const auto order = instance.preference(p);
      prefs.push_back(std::vector<Resource>(order.begin(), order.end()));
    }
    doc["preferences"] = std::move(prefs);
  }
  return doc.dump(2) + "\n";
}

std::string instance_digest(const GameInstance& instance) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_instance(instance)) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return "fnv1a64:" + hex64(hash);
}

TraceDocument make_trace_document(const GameInstance& instance,
                                  const DynamicsOptions& options,
                                  const DynamicsResult& result) {
  TraceDocument doc;
  doc.instance_digest = instance_digest(instance);
  doc.scheduler = to_string(options.scheduler);
  doc.mode = to_string(options.mode);
  doc.seed = options.seed;
  doc.max_steps = options.max_steps;
  doc.trace = result.trace;
  doc.status = to_string(result.status);
  doc.cycle_period = result.cycle_period;
  return doc;
}

std::string serialize_trace(const TraceDocument& document) {
  json doc;
  doc["header"] = {{"instance_digest", document.instance_digest},
                   {"scheduler", document.scheduler},
                   {"mode", document.mode},
                   {"seed", document.seed},
                   {"max_steps", document.max_steps},
                   {"start", to_string(document.trace.initial)}};
  json rows = json::array();
  for (const ImprovementStep& s : document.trace.steps) {
    rows.push_back({{"t", s.time},
                    {"mover", s.mover},
                    {"from", s.from},
                    {"to", s.to},
                    {"payoff_before", to_string(s.payoff_before)},
                    {"payoff_after", to_string(s.payoff_after)}});
  }
  doc["rows"] = std::move(rows);
  doc["footer"] = {{"status", document.status},
                   {"final", to_string(document.trace.final_state())},
                   {"cycle_period", document.cycle_period
                                        ? json(*document.cycle_period)
                                        : json(nullptr)}};
  return doc.dump(2) + "\n";
}

TraceDocument parse_trace(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("/", "expected an object");
  reject_unknown(doc, "", {"header", "rows", "footer"});
  TraceDocument out;
  const json& header = field(doc, "", "header");
  reject_unknown(header, "/header",
                 {"instance_digest", "scheduler", "mode", "seed", "max_steps",
                  "start"});
  auto text_field = [](const json& object, const std::string& path,
                       const char* key) {
    const json& v = field(object, path, key);
    if (!v.is_string()) throw ParseError(path + "/" + key, "expected a string");
    return v.get<std::string>();
  };
  out.instance_digest = text_field(header, "/header", "instance_digest");
  out.scheduler = text_field(header, "/header", "scheduler");
  out.mode = text_field(header, "/header", "mode");
  out.seed = as_unsigned(field(header, "/header", "seed"), "/header/seed");
  out.max_steps =
      as_unsigned(field(header, "/header", "max_steps"), "/header/max_steps");
  out.trace.initial =
      as_profile(field(header, "/header", "start"), "/header/start");

  const json& rows = as_array(field(doc, "", "rows"), "/rows");
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::string path = pointer("/rows", k);
    reject_unknown(rows[k], path,
                   {"t", "mover", "from", "to", "payoff_before",
                    "payoff_after"});
    ImprovementStep s;
    s.time = as_unsigned(field(rows[k], path, "t"), path + "/t");
    s.mover = as_unsigned(field(rows[k], path, "mover"), path + "/mover");
    s.from = static_cast<Resource>(
        as_unsigned(field(rows[k], path, "from"), path + "/from"));
    s.to = static_cast<Resource>(
        as_unsigned(field(rows[k], path, "to"), path + "/to"));
    s.payoff_before = as_rational(field(rows[k], path, "payoff_before"),
                                  path + "/payoff_before");
    s.payoff_after = as_rational(field(rows[k], path, "payoff_after"),
                                 path + "/payoff_after");
    if (s.time != k + 1) throw ParseError(path + "/t", "times must be 1, 2, ...");
    if (s.mover >= out.trace.initial.size()) {
      throw ParseError(path + "/mover", "player out of range");
    }
    out.trace.steps.push_back(s);
  }

  const json& footer = field(doc, "", "footer");
  reject_unknown(footer, "/footer", {"status", "final", "cycle_period"});
  out.status = text_field(footer, "/footer", "status");
  const StrategyProfile final_state =
      as_profile(field(footer, "/footer", "final"), "/footer/final");
  if (final_state != out.trace.final_state()) {
    throw ParseError("/footer/final", "does not match the rows");
  }
  const json& period = field(footer, "/footer", "cycle_period");
  if (!period.is_null()) {
    out.cycle_period = as_unsigned(period, "/footer/cycle_period");
  }
  return out;
}

std::string replay_trace(const GameInstance& instance,
                         const TraceDocument& document) {
  if (document.instance_digest != instance_digest(instance)) {
    return "instance digest mismatch: trace has " + document.instance_digest +
           ", instance is " + instance_digest(instance);
  }
  if (document.trace.initial.size() != instance.player_count()) {
    return "start profile has the wrong number of players";
  }
  std::string error = check_trace(instance, document.trace, true);
  if (!error.empty()) return error;
  const bool nash = is_nash(instance, document.trace.final_state()).is_nash;
  if (document.status == to_string(TerminalStatus::kConvergedToNash) &&
      !nash) {
    return "footer claims convergence but the final state is not an NE";
  }
  if (document.status == to_string(TerminalStatus::kCycleDetected)) {
    if (!document.cycle_period) return "cycle status without a period";
    const std::size_t p = *document.cycle_period;
    const std::size_t t = document.trace.steps.size();
    if (p == 0 || p > t ||
        document.trace.state_before(t + 1 - p) !=
            document.trace.final_state()) {
      return "cycle period does not match the rows";
    }
  }
  return "";
}

std::vector<ScheduledMove> parse_schedule(std::string_view text) {
  std::vector<ScheduledMove> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    const std::string context = "line " + std::to_string(line_no);
    if (tokens.size() > 2) throw ParseError(context, "expected PLAYER [RESOURCE]");
    for (const std::string& tok : tokens) {
      if (tok.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError(context, "expected non-negative integers");
      }
    }
    ScheduledMove move;
    try {
      move.player = std::stoul(tokens[0]);
      if (tokens.size() == 2) {
        const int r = std::stoi(tokens[1]);
        if (r < 1) throw ParseError(context, "resources start at 1");
        move.target = r;
      }
    } catch (const std::out_of_range&) {
      throw ParseError(context, "number out of range");
    }
    out.push_back(move);
  }
  return out;
}

}  // namespace scg

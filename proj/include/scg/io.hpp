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


// JSON instance and trace documents, and the plain-text schedule format.
//
// Instance document (keys sorted on output):
//   {"directed": false, "edges": [[0, 1]], "monotone": true,
//    "payoffs": [[["5", "3"], ["4", "2"]], ...], "players": 2,
//    "preferences": [[2, 1], ...], "resources": 2, "schema_version": 1}
// payoffs[i][r - 1] lists g_r^i(1), g_r^i(2), ... as integer or "p/q"
// strings. "preferences" is omitted when every player uses ascending order.

#ifndef SCG_IO_HPP_
#define SCG_IO_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scg/dynamics.hpp"
#include "scg/game.hpp"

namespace scg {

inline constexpr int kSchemaVersion = 1;

// Throws ParseError with a JSON pointer (or byte offset) as context.
GameInstance parse_instance(std::string_view text);
// Canonical form: sorted keys, two-space indent, trailing newline.
std::string serialize_instance(const GameInstance& instance);

// "fnv1a64:" followed by 16 hex digits, over the canonical serialization.
std::string instance_digest(const GameInstance& instance);

struct TraceDocument {
  std::string instance_digest;
  std::string scheduler;
  std::string mode;
  std::uint64_t seed = 0;
  std::size_t max_steps = 0;
  ImprovementTrace trace;
  std::string status;
  std::optional<std::size_t> cycle_period;
};

TraceDocument make_trace_document(const GameInstance& instance,
                                  const DynamicsOptions& options,
                                  const DynamicsResult& result);
std::string serialize_trace(const TraceDocument& document);
TraceDocument parse_trace(std::string_view text);

// Checks the digest, every row (recorded states and payoffs, strict
// improvement) and the footer's final state and status. Returns an empty
// string on success, otherwise the first problem found.
std::string replay_trace(const GameInstance& instance,
                         const TraceDocument& document);

// One move per line: "PLAYER" or "PLAYER RESOURCE". Blank lines and text
// after '#' are ignored. Players are 0-indexed, resources 1-indexed.
std::vector<ScheduledMove> parse_schedule(std::string_view text);

}  // namespace scg

#endif  // SCG_IO_HPP_

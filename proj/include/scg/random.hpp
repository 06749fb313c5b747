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

#ifndef SCG_RANDOM_HPP_
#define SCG_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <random>

namespace scg {

// Uniform draw from [0, n). std::uniform_int_distribution is not specified
// bit-for-bit across standard libraries; seeded outputs must be.
inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit =
      std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return static_cast<std::size_t>(draw % bound);
}

// Uniform integer in [lo, hi].
inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo,
                                std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  uniform_index(rng, static_cast<std::size_t>(hi - lo + 1)));
}

}  // namespace scg

#endif  // SCG_RANDOM_HPP_

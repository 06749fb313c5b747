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

#ifndef SCG_RATIONAL_HPP_
#define SCG_RATIONAL_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace scg {

// Payoffs are exact; all comparisons in the library are decided on these.
using Rational = boost::rational<std::int64_t>;

// Formats as "p" when the denominator is 1, otherwise "p/q" (reduced).
std::string to_string(const Rational& value);

// Accepts "p", "-p", "p/q" with q != 0. Throws InputError otherwise.
Rational parse_rational(std::string_view text);

}  // namespace scg

// Boost 1.74 resolves rational == integer to a pair of friend templates that
// call each other under C++20 reversed-operator lookup. Exact overloads win
// overload resolution and break the loop.
namespace boost {

#define SCG_RATIONAL_EQ(T)                                               \
  inline bool operator==(const rational<std::int64_t>& lhs, T rhs) {     \
    return lhs == rational<std::int64_t>(static_cast<std::int64_t>(rhs)); \
  }
SCG_RATIONAL_EQ(int)
SCG_RATIONAL_EQ(long)
SCG_RATIONAL_EQ(long long)
SCG_RATIONAL_EQ(unsigned)
SCG_RATIONAL_EQ(unsigned long)
SCG_RATIONAL_EQ(unsigned long long)
#undef SCG_RATIONAL_EQ

}  // namespace boost

#endif  // SCG_RATIONAL_HPP_

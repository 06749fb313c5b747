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

#include "scg/rational.hpp"

#include <charconv>

#include "scg/errors.hpp"

namespace scg {
namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw InputError("invalid rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

std::string to_string(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" +
         std::to_string(value.denominator());
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  const std::int64_t num = parse_integer(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw InputError("invalid rational '" + std::string(text) + "'");
  }
  const std::int64_t den = parse_integer(den_text, text);
  if (den == 0) {
    throw InputError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

}  // namespace scg

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

#ifndef SCG_ERRORS_HPP_
#define SCG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace scg {

// Bad indices, violated preconditions, malformed instances.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A document could not be parsed. `context` names the offending field
// (JSON pointer) or the byte/line position.
class ParseError : public InputError {
 public:
  ParseError(const std::string& context, const std::string& message)
      : InputError(context + ": " + message), context_(context) {}
  const std::string& context() const { return context_; }

 private:
  std::string context_;
};

// An exhaustive scan would exceed the configured profile cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A canonical instance failed its own consistency certificate.
class BuildError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace scg

#endif  // SCG_ERRORS_HPP_

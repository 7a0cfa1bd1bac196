// Copyright 2026 The MARC Solver Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MARC_ERRORS_H_
#define MARC_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace marc {

// Raised for malformed caller input: dimension mismatches, invalid strategies,
// games outside an operation's domain.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ParseErrorKind {
  kMissingFile,
  kSyntax,
  kRowCount,
  kBadRational,
};

const char* ParseErrorKindName(ParseErrorKind kind);

// Raised by the rational-literal and game-document parsers. Line and column
// are 1-based; zero means "not applicable".
class ParseError : public InputError {
 public:
  ParseError(ParseErrorKind kind, const std::string& message,
             std::size_t line = 0, std::size_t column = 0);

  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
};

// A solver result failed its own exactness check. Seeing one of these is a
// bug, never a property of the input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace marc

#endif  // MARC_ERRORS_H_

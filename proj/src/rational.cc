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

#include "marc/rational.h"

#include <cctype>
#include <ostream>

#include "marc/errors.h"

namespace marc {

const char* ParseErrorKindName(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMissingFile:
      return "missing-file";
    case ParseErrorKind::kSyntax:
      return "syntax";
    case ParseErrorKind::kRowCount:
      return "row-count";
    case ParseErrorKind::kBadRational:
      return "bad-rational";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, const std::string& message,
                       std::size_t line, std::size_t column)
    : InputError(message), kind_(kind), line_(line), column_(column) {}

namespace {

mpz_class ToMpz(long long v) {
  // mpz_class has no long long constructor on every platform.
  return mpz_class(std::to_string(v));
}

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long long value) : value_(ToMpz(value)) {}

Rational::Rational(long long numerator, long long denominator)
    : value_(ToMpz(numerator), ToMpz(denominator)) {
  if (denominator == 0) throw InputError("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
  value_.canonicalize();
}

Rational Rational::Parse(std::string_view text) {
  auto fail = [&](const std::string& why) {
    return ParseError(ParseErrorKind::kBadRational,
                      "bad rational literal '" + std::string(text) + "': " + why);
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!AllDigits(num)) throw fail("expected decimal integer numerator");
  if (!AllDigits(den)) throw fail("expected positive decimal denominator");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw fail("zero denominator");
  if (negative) n = -n;
  Rational out;
  out.value_ = mpq_class(n, d);
  out.value_.canonicalize();
  return out;
}

std::string Rational::ToString() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw InputError("division by zero rational");
  value_ /= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

Rational Abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace marc

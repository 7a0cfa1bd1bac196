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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "marc/errors.h"
#include "marc/rational.h"

namespace marc {
namespace {

TEST_CASE("parse canonicalizes") {
  CHECK(Rational::Parse("2/4") == Rational(1, 2));
  CHECK(Rational::Parse("2/4").ToString() == "1/2");
  CHECK(Rational::Parse("-3") == Rational(-3));
  CHECK(Rational::Parse("-3").denominator() == 1);
  CHECK(Rational::Parse("+12/2").ToString() == "6");
}

TEST_CASE("parse rejects malformed literals") {
  for (const char* bad : {"2/0", "", "1.5", "1/", "/2", "a", "1 /2", "--1", "6/-1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::Parse(bad), ParseError);
  }
  try {
    Rational::Parse("2/0");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseErrorKind::kBadRational);
  }
}

TEST_CASE("arithmetic is exact") {
  const Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK(Rational(1, 10) * Rational(10) == Rational(1));
  CHECK(Rational(7, 3) - Rational(1, 3) == Rational(2));
  CHECK(Rational(3, 4) / Rational(3, 8) == Rational(2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(-Rational(1, 2) < Rational(0));
  CHECK(Abs(Rational(-5, 7)) == Rational(5, 7));
  CHECK_THROWS_AS(Rational(1) / Rational(0), InputError);
  CHECK_THROWS_AS(Rational(1, 0), InputError);
}

TEST_CASE("large values do not overflow") {
  Rational x(1);
  for (int k = 0; k < 100; ++k) x *= Rational(1000000007);
  for (int k = 0; k < 100; ++k) x /= Rational(1000000007);
  CHECK(x == Rational(1));
  CHECK(Rational(1, 1000000000) + Rational(1, 1000000001) !=
        Rational(2, 1000000000));
}

TEST_CASE("round trip through text") {
  for (const char* s : {"0", "5", "-5", "22/7", "-1/1000000000000000000000"}) {
    CHECK(Rational::Parse(Rational::Parse(s).ToString()) == Rational::Parse(s));
  }
}

}  // namespace
}  // namespace marc

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

#ifndef MARC_RATIONAL_H_
#define MARC_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace marc {

// Exact rational number in canonical form: positive denominator, numerator
// and denominator coprime. Backed by GMP so that products of payoffs and
// probabilities in n-player expectations never overflow.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long long value);  // NOLINT(google-explicit-constructor)
  Rational(long long numerator, long long denominator);
  explicit Rational(const mpq_class& value);

  // Accepts an optional sign, a decimal integer, and optionally "/" followed
  // by a positive decimal integer. No whitespace. Throws ParseError.
  static Rational Parse(std::string_view text);

  const mpq_class& mpq() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  // "n" for integers, "n/d" otherwise. Parse(ToString()) == *this.
  std::string ToString() const;

  // For diagnostics only; never used in a decision.
  double ToDouble() const { return value_.get_d(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);  // throws InputError on zero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational Abs(const Rational& r);

}  // namespace marc

#endif  // MARC_RATIONAL_H_

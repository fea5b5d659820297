// Copyright 2026 The Cevian Authors
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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "cevian/errors.hpp"

namespace cevian {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, the only scalar of the library. Always held
// in canonical form: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
// Immutable value semantics, exact comparisons, no floating point anywhere.
class Rational {
 public:
  Rational() = default;  // zero
  Rational(int n) : v_(n) {}
  Rational(long long n) : v_(n) {}
  Rational(const BigInt& n) : v_(n) {}

  // Throws ZeroDenominator. Sign is normalized onto the numerator.
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ZeroDenominator("denominator is zero");
    v_ = Raw(num) / Raw(den);
  }
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_.sign(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero");
    return Rational(a.v_ / b.v_);
  }
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

 private:
  using Raw = boost::multiprecision::cpp_rational;
  explicit Rational(Raw raw) : v_(std::move(raw)) {}
  Raw v_;
};

// Strict grammar: optional sign, digits, optional "/" digits.
// Throws MalformedNumber or ZeroDenominator.
Rational parse_rational(std::string_view text);

// Canonical text form, "p/q" when q != 1, plain "p" otherwise.
// parse_rational(render(r)) == r for every r.
std::string render(const Rational& r);

// Fixed-point decimal with exactly `places` fractional digits, rounding
// half away from zero. Used only when emitting SVG coordinates; the core
// never leaves exact arithmetic.
std::string decimal_string(const Rational& r, int places);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace cevian

namespace Eigen {

template <>
struct NumTraits<cevian::Rational> : GenericNumTraits<cevian::Rational> {
  using Real = cevian::Rational;
  using NonInteger = cevian::Rational;
  using Nested = cevian::Rational;
  using Literal = long long;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 20,
    MulCost = 20,
  };
};

}  // namespace Eigen

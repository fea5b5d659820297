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

#include "cevian/rational.hpp"

#include <cctype>
#include <ostream>

namespace cevian {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt digits_to_int(std::string_view s) { return BigInt(std::string(s)); }

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  const auto slash = rest.find('/');
  std::string_view num_part = rest.substr(0, slash);
  if (!all_digits(num_part)) {
    throw MalformedNumber("not a rational: \"" + std::string(text) + "\"");
  }
  BigInt num = digits_to_int(num_part);
  BigInt den = 1;
  if (slash != std::string_view::npos) {
    std::string_view den_part = rest.substr(slash + 1);
    if (!all_digits(den_part)) {
      throw MalformedNumber("not a rational: \"" + std::string(text) + "\"");
    }
    den = digits_to_int(den_part);
    if (den == 0) {
      throw ZeroDenominator("zero denominator in \"" + std::string(text) + "\"");
    }
  }
  if (negative) num = -num;
  return Rational(num, den);
}

std::string render(const Rational& r) {
  std::string out = r.numerator().str();
  if (!r.is_integer()) {
    out += '/';
    out += r.denominator().str();
  }
  return out;
}

std::string decimal_string(const Rational& r, int places) {
  if (places < 0) throw DegenerateInput("negative decimal precision");
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  // Round |r|*scale half away from zero, then reinsert the sign.
  BigInt num = r.numerator();
  const bool negative = num < 0;
  if (negative) num = -num;
  BigInt scaled = (2 * num * scale + r.denominator()) / (2 * r.denominator());
  std::string digits = scaled.str();
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, places + 1 - digits.size(), '0');
  }
  std::string out;
  if (negative && scaled != 0) out += '-';
  out += digits.substr(0, digits.size() - places);
  if (places > 0) {
    out += '.';
    out += digits.substr(digits.size() - places);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << render(r);
}

}  // namespace cevian

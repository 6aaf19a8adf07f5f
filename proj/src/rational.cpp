// Copyright 2026 The Authors.
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

#include "matroidx/rational.hpp"

#include <cctype>

#include "matroidx/errors.hpp"

namespace matroidx {

std::string to_fraction_string(const Rational& r) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  size_t slash = text.find('/');
  if (slash != std::string::npos) {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) {
      throw ParseError("bad rational literal: " + text);
    }
    BigInt d(den);
    if (d == 0) throw ParseError("zero denominator: " + text);
    return Rational(BigInt(num), d);
  }
  size_t dot = text.find('.');
  if (dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    if (!is_integer_literal(whole) || frac.empty() ||
        !is_integer_literal(frac)) {
      throw ParseError("bad decimal literal: " + text);
    }
    BigInt scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt num = BigInt(whole) * scale;
    BigInt frac_num(frac);
    if (!whole.empty() && whole[0] == '-') {
      num -= frac_num;
    } else {
      num += frac_num;
    }
    return Rational(num, scale);
  }
  if (!is_integer_literal(text)) throw ParseError("bad literal: " + text);
  return Rational(BigInt(text));
}

int floor_log(const Rational& value, const Rational& base) {
  if (base <= 1) throw InputError("floor_log base must exceed 1");
  if (value < 1) throw InputError("floor_log value must be >= 1");
  int i = 0;
  Rational power = base;
  while (power <= value) {
    ++i;
    power *= base;
  }
  return i;
}

Rational rational_pow(const Rational& base, int exp) {
  if (exp == 0) return Rational(1);
  bool invert = exp < 0;
  unsigned e = invert ? static_cast<unsigned>(-(long long)exp)
                      : static_cast<unsigned>(exp);
  Rational result(1);
  Rational b = base;
  while (e > 0) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1u;
  }
  if (invert) return Rational(1) / result;
  return result;
}

BigInt common_denominator(const std::vector<Rational>& values) {
  BigInt l = 1;
  for (const Rational& v : values) {
    BigInt d = denominator(v);
    l = boost::multiprecision::lcm(l, d);
  }
  return l;
}

}  // namespace matroidx

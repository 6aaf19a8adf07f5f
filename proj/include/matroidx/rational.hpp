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

#ifndef MATROIDX_RATIONAL_HPP
#define MATROIDX_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace matroidx {

// All weights and dual values are exact rationals so that equality-based
// identities (opt = opt', f(y,z) = g(y',z')) can be asserted without
// tolerances.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline BigInt denominator(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

// Serialized form is always "p/q" (q omitted when 1), lowest terms.
std::string to_fraction_string(const Rational& r);

// Accepts "p", "p/q" and plain decimals like "0.1".
Rational parse_rational(const std::string& text);

// Largest integer i with base^i <= value; requires base > 1 and value >= 1.
int floor_log(const Rational& value, const Rational& base);

// base^exp for integer exp (exp may be negative).
Rational rational_pow(const Rational& base, int exp);

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
  return -floor_div(-a, b);
}

inline BigInt floor_rational(const Rational& r) {
  return floor_div(numerator(r), denominator(r));
}

inline BigInt ceil_rational(const Rational& r) {
  return ceil_div(numerator(r), denominator(r));
}

// Least common multiple of the denominators; 0 terms give 1.
BigInt common_denominator(const std::vector<Rational>& values);

}  // namespace matroidx

#endif  // MATROIDX_RATIONAL_HPP

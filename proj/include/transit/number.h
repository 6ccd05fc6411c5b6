// Copyright 2023 The Authors.
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

#ifndef TRANSIT_NUMBER_H_
#define TRANSIT_NUMBER_H_

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

#include "transit/errors.h"

namespace transit {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Absolute tolerance used by every comparison in floating mode.
inline double& FloatTolerance() {
  static double tolerance = 1e-9;
  return tolerance;
}

template <typename T>
struct NumTraits;

template <>
struct NumTraits<Rational> {
  static constexpr bool kExact = true;
  static bool Less(const Rational& a, const Rational& b) { return a < b; }
  static bool Equal(const Rational& a, const Rational& b) { return a == b; }
  static double ToDouble(const Rational& a) { return a.convert_to<double>(); }
  static std::string ToString(const Rational& a) {
    if (denominator(a) == 1) return numerator(a).str();
    return numerator(a).str() + "/" + denominator(a).str();
  }
};

template <>
struct NumTraits<double> {
  static constexpr bool kExact = false;
  static bool Less(double a, double b) { return a < b - FloatTolerance(); }
  static bool Equal(double a, double b) {
    return std::fabs(a - b) <= FloatTolerance();
  }
  static double ToDouble(double a) { return a; }
  static std::string ToString(double a) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", a);
    return buf;
  }
};

template <typename T>
bool Lt(const T& a, const T& b) {
  return NumTraits<T>::Less(a, b);
}
template <typename T>
bool Gt(const T& a, const T& b) {
  return NumTraits<T>::Less(b, a);
}
template <typename T>
bool Le(const T& a, const T& b) {
  return !NumTraits<T>::Less(b, a);
}
template <typename T>
bool Ge(const T& a, const T& b) {
  return !NumTraits<T>::Less(a, b);
}
template <typename T>
bool Eq(const T& a, const T& b) {
  return NumTraits<T>::Equal(a, b);
}
template <typename T>
double ToDouble(const T& a) {
  return NumTraits<T>::ToDouble(a);
}
template <typename T>
std::string ToString(const T& a) {
  return NumTraits<T>::ToString(a);
}

// Parses "p/q", integers and decimals (with optional exponent) exactly.
inline Rational ParseRational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw ParseError("not a number: '" + std::string(text) + "'");
  };
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.pop_back();
  }
  size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) {
    ++start;
  }
  s = s.substr(start);
  if (s.empty()) return fail();
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational num = ParseRational(s.substr(0, slash));
    Rational den = ParseRational(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return num / den;
  }
  bool negative = false;
  size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') {
    negative = s[pos] == '-';
    ++pos;
  }
  BigInt digits = 0;
  long long scale = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c >= '0' && c <= '9') {
      digits = digits * 10 + (c - '0');
      seen_digit = true;
      if (seen_point) --scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) return fail();
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') return fail();
    ++pos;
    long long exponent = 0;
    auto [ptr, ec] =
        std::from_chars(s.data() + pos + (s[pos] == '+' ? 1 : 0),
                        s.data() + s.size(), exponent);
    if (ec != std::errc() || ptr != s.data() + s.size()) return fail();
    scale += exponent;
  }
  if (scale > 4000 || scale < -4000) return fail();
  Rational value(digits);
  BigInt ten_power = 1;
  for (long long k = 0; k < (scale < 0 ? -scale : scale); ++k) ten_power *= 10;
  if (scale >= 0) {
    value *= Rational(ten_power);
  } else {
    value /= Rational(ten_power);
  }
  return negative ? Rational(-value) : value;
}

// Exact rational of the shortest decimal that round-trips to `x`.
inline Rational RationalFromDouble(double x) {
  if (!std::isfinite(x)) throw ParseError("non-finite number");
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw ParseError("cannot format number");
  return ParseRational(std::string_view(buf, ptr - buf));
}

template <typename T>
T FromRational(const Rational& r) {
  if constexpr (std::is_same_v<T, Rational>) {
    return r;
  } else {
    return r.convert_to<double>();
  }
}

template <typename T>
T FromDouble(double x) {
  if constexpr (std::is_same_v<T, Rational>) {
    return RationalFromDouble(x);
  } else {
    return x;
  }
}

template <typename T>
T Abs(const T& a) {
  return a < T(0) ? T(-a) : a;
}

}  // namespace transit

#endif  // TRANSIT_NUMBER_H_

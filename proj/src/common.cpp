// Copyright 2026 The trustpat Authors.
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

#include "trustpat/common.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

namespace trustpat {

using boost::multiprecision::cpp_int;

namespace {

cpp_int parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
  }
  cpp_int value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("not a number: '" + std::string(whole) +
                                  "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    cpp_int num = parse_integer(text.substr(0, slash), whole);
    cpp_int den = parse_integer(text.substr(slash + 1), whole);
    if (den == 0) {
      throw std::invalid_argument("zero denominator: '" + std::string(whole) +
                                  "'");
    }
    value = Rational(num, den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw std::invalid_argument("not a number: '" + std::string(whole) +
                                  "'");
    }
    cpp_int num = int_part.empty() ? cpp_int(0) : parse_integer(int_part, whole);
    cpp_int scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    if (!frac_part.empty()) num = num * scale + parse_integer(frac_part, whole);
    value = Rational(num, scale);
  } else {
    value = Rational(parse_integer(text, whole));
  }
  return negative ? Rational(-value) : value;
}

std::string format_fixed(double value, int decimals) {
  if (!std::isfinite(value)) return std::isnan(value) ? "nan" : "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string out(buf);
  // "-0.00000000" renders as zero.
  if (out.front() == '-' &&
      out.find_first_not_of("-0.") == std::string::npos) {
    out.erase(0, 1);
  }
  return out;
}

std::string format_fixed(const Rational& value, int decimals) {
  cpp_int scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  const bool negative = value < 0;
  const Rational magnitude = negative ? Rational(-value) : value;
  // Round half away from zero.
  const cpp_int num = boost::multiprecision::numerator(magnitude) * scale;
  const cpp_int den = boost::multiprecision::denominator(magnitude);
  cpp_int scaled = (2 * num + den) / (2 * den);

  std::string digits = scaled.str();
  if (static_cast<int>(digits.size()) <= decimals) {
    digits.insert(0, decimals + 1 - digits.size(), '0');
  }
  std::string out = digits.substr(0, digits.size() - decimals);
  if (decimals > 0) out += "." + digits.substr(digits.size() - decimals);
  if (negative && scaled != 0) out.insert(0, "-");
  return out;
}

}  // namespace trustpat

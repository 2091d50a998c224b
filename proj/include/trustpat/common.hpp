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

#ifndef TRUSTPAT_COMMON_HPP_
#define TRUSTPAT_COMMON_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace trustpat {

using ObjectId = std::string;

// Exact rational used wherever a value must be reproduced bit-for-bit
// (constraint rows, binomial probabilities, membership degrees).
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Parses "0.5", "-3", "1/3", "2.125". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Fixed-point rendering with `decimals` places; reports use 8.
std::string format_fixed(double value, int decimals = 8);
std::string format_fixed(const Rational& value, int decimals = 8);

// Base of every error raised by the library. `kind()` is a stable token that
// reports and tests can match on.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error("DomainError", msg) {}
};

class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& msg) : Error("ShapeError", msg) {}
};

class UnknownObject : public Error {
 public:
  explicit UnknownObject(const ObjectId& id)
      : Error("UnknownObject", "unknown object '" + id + "'"), object_(id) {}
  const ObjectId& object() const noexcept { return object_; }

 private:
  ObjectId object_;
};

}  // namespace trustpat

#endif  // TRUSTPAT_COMMON_HPP_

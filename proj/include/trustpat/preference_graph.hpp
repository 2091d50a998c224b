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

#ifndef TRUSTPAT_PREFERENCE_GRAPH_HPP_
#define TRUSTPAT_PREFERENCE_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "trustpat/choice_model.hpp"
#include "trustpat/common.hpp"

namespace trustpat {

// Binary "preferred to" relation over one period's catalog. Entry (i, j) is 1
// iff object i survived to a strictly later stage than object j.
class PreferenceMatrix {
 public:
  // Throws ShapeError unless bits has order.size()^2 entries in {0,1} with a
  // zero diagonal.
  PreferenceMatrix(std::vector<ObjectId> order, std::vector<std::uint8_t> bits);

  static PreferenceMatrix zero(std::vector<ObjectId> order);

  std::size_t size() const { return order_.size(); }
  const std::vector<ObjectId>& order() const { return order_; }
  std::span<const std::uint8_t> bits() const { return bits_; }
  std::span<const std::uint8_t> row(std::size_t i) const {
    return std::span<const std::uint8_t>(bits_).subspan(i * size(), size());
  }
  bool at(std::size_t i, std::size_t j) const {
    return bits_[i * size() + j] != 0;
  }

  friend bool operator==(const PreferenceMatrix&,
                         const PreferenceMatrix&) = default;

 private:
  std::vector<ObjectId> order_;
  std::vector<std::uint8_t> bits_;
};

// Concatenation of t row-major n×n blocks.
class PatternVector {
 public:
  PatternVector(std::vector<std::uint8_t> bits, std::size_t n,
                std::size_t periods);

  std::size_t objects() const { return n_; }
  std::size_t periods() const { return t_; }
  std::span<const std::uint8_t> bits() const { return bits_; }

  // ASCII '0'/'1' rendering used in reports.
  std::string to_string() const;
  static PatternVector parse(std::string_view text, std::size_t n);

  friend bool operator==(const PatternVector&, const PatternVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
  std::size_t n_;
  std::size_t t_;
};

PreferenceMatrix derive_matrix(const ValidatedEpisode& episode);

std::vector<int> outdegrees(const PreferenceMatrix& m);

PatternVector flatten(const PreferenceMatrix& m);

// Inverse of flatten for a single-period vector.
PreferenceMatrix unflatten(const PatternVector& p,
                           std::vector<ObjectId> order);

// Period-order concatenation of flattenings; ShapeError when shapes differ.
PatternVector concat_patterns(std::span<const PreferenceMatrix> ms);

// Entrywise OR. Loses the per-period pairwise information and may contain
// cycles; kept for diagnostics only.
PreferenceMatrix union_matrix(std::span<const PreferenceMatrix> ms);

bool is_acyclic(const PreferenceMatrix& m);

}  // namespace trustpat

#endif  // TRUSTPAT_PREFERENCE_GRAPH_HPP_

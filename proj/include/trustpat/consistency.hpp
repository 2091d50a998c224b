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

// Brute-force consistency checks for small choice problems: Arrow's
// contraction condition and rationalizability by one strict order.

#ifndef TRUSTPAT_CONSISTENCY_HPP_
#define TRUSTPAT_CONSISTENCY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trustpat/common.hpp"
#include "trustpat/pattern_runs.hpp"

namespace trustpat {

inline constexpr std::size_t kMaxGroundSet = 6;

// Subsets of the ground set as bitmasks over its positions.
using Subset = std::uint32_t;

// Recorded choices C(X) for some nonempty subsets X of a ground set of at
// most kMaxGroundSet elements.
class ChoiceObservations {
 public:
  explicit ChoiceObservations(std::vector<ObjectId> ground_set);

  const std::vector<ObjectId>& ground_set() const { return ground_; }
  std::size_t size() const { return ground_.size(); }

  // Throws DomainError for an empty subset, unknown ids, or a choice outside
  // the subset.
  void record(const std::vector<ObjectId>& subset, const ObjectId& chosen);
  void record(Subset subset, std::size_t chosen_index);

  bool has(Subset s) const { return choices_[s] >= 0; }
  std::size_t choice(Subset s) const;
  std::vector<Subset> recorded() const;
  std::vector<Subset> missing() const;

  Subset mask_of(const std::vector<ObjectId>& ids) const;
  std::vector<ObjectId> ids_of(Subset s) const;

 private:
  std::vector<ObjectId> ground_;
  std::vector<int> choices_;  // indexed by subset mask; -1 when unrecorded
};

class IncompleteTable : public Error {
 public:
  explicit IncompleteTable(std::vector<std::vector<ObjectId>> missing);
  const std::vector<std::vector<ObjectId>>& missing() const { return missing_; }

 private:
  std::vector<std::vector<ObjectId>> missing_;
};

// Choice function defined on every one of the 2^n - 1 nonempty subsets.
class ChoiceFunctionTable {
 public:
  // Throws IncompleteTable listing every unrecorded subset.
  explicit ChoiceFunctionTable(ChoiceObservations observations);

  // Table of the maximizer of `order` (best first) on every subset.
  static ChoiceFunctionTable from_order(const std::vector<ObjectId>& order);

  const ChoiceObservations& observations() const { return obs_; }
  const std::vector<ObjectId>& ground_set() const { return obs_.ground_set(); }
  std::size_t choice(Subset s) const { return obs_.choice(s); }

 private:
  ChoiceObservations obs_;
};

struct ContractionViolation {
  Subset smaller;  // X1
  Subset larger;   // X2, with X1 ⊆ X2 and C(X2) ∈ X1 but C(X1) != C(X2)
};

struct ContractionResult {
  bool consistent = true;
  std::vector<ContractionViolation> violations;
};

// Checks every recorded pair X1 ⊆ X2.
ContractionResult check_contraction(const ChoiceObservations& obs);
ContractionResult check_contraction(const ChoiceFunctionTable& table);

// First strict order (best first, lexicographic over permutations of the
// ground set) whose maximizer reproduces every recorded choice.
std::optional<std::vector<ObjectId>> rationalizable(
    const ChoiceObservations& obs);
std::optional<std::vector<ObjectId>> rationalizable(
    const ChoiceFunctionTable& table);

enum class Lemma2Class { kStrong, kWeak, kNeither };

std::string_view to_string(Lemma2Class c);

// (k, k+1) is Strong, (k+1, k) is Weak. DomainError on ε.
Lemma2Class classify_lemma2(RunCount first, RunCount second);

}  // namespace trustpat

#endif  // TRUSTPAT_CONSISTENCY_HPP_

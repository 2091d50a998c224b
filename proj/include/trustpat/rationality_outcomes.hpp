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

// The rationality outcome set τ: every admissible tuple of per-period run
// counts, its consistency rank, and (for two periods) the bar of the
// binomial tree it falls in together with that bar's membership degree.

#ifndef TRUSTPAT_RATIONALITY_OUTCOMES_HPP_
#define TRUSTPAT_RATIONALITY_OUTCOMES_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trustpat/common.hpp"
#include "trustpat/pattern_runs.hpp"

namespace trustpat {

// Highest rank first.
enum class RankClass { kReflexive, kIncreasing, kDecreasing, kMixed };

std::string_view to_string(RankClass c);

// Bars group two-period patterns by the signed difference slot2 - slot1
// (ε as 0). Labels run A.. over the negative side by growing magnitude, then
// the zero bar, then the positive side; for n=4 that is
//   -1:A -2:B -3:C 0:D +1:E +2:F +3:G.
struct Bar {
  int difference = 0;

  friend auto operator<=>(const Bar&, const Bar&) = default;
};

struct TauPattern {
  std::vector<RunCount> slots;
  RankClass rank_class = RankClass::kReflexive;
  std::optional<Bar> bar;  // set only when there are two periods

  std::string to_string() const;  // "(3,ε)"
};

RankClass classify_rank(std::span<const RunCount> slots);

// Full product of {ε, 1, ..., n_k - 1} over the periods, in lexicographic
// order with ε first. DomainError for an empty list or any n_k < 2.
std::vector<TauPattern> build_tau(std::span<const int> objects_per_period);

struct TauCount {
  std::int64_t decreasing = 0;     // slot1 > slot2
  std::int64_t nondecreasing = 0;  // slot1 <= slot2
  std::int64_t total() const { return decreasing + nondecreasing; }
};

// |τ| for two periods over n objects: C(n,2) strictly decreasing pairs plus
// [n]^2/2! = n(n+1)/2 nondecreasing ones.
TauCount count_tau_two_periods(int n);

// (n-1)! + [n]^2/2!, the closed form quoted for the n=4 worked example.
// Agrees with count_tau_two_periods only for n in {2, 4}.
std::int64_t factorial_count_formula(int n);

// DomainError unless the pattern has exactly two slots.
Bar bin_pattern(const TauPattern& p);
Bar bin_pattern(std::span<const RunCount> slots);

class BinTable {
 public:
  // Frequencies of every bar over τ for two periods with the given sizes.
  BinTable(int objects_first, int objects_second);

  int min_difference() const { return min_diff_; }
  int max_difference() const { return max_diff_; }
  std::size_t bar_count() const { return frequencies_.size(); }

  // All bars, ordered by label.
  std::vector<Bar> bars() const;
  std::string label(Bar bar) const;
  // Inverse of label(); nullopt when unknown.
  std::optional<Bar> find(std::string_view label) const;

  bool contains(Bar bar) const {
    return bar.difference >= min_diff_ && bar.difference <= max_diff_;
  }
  std::int64_t frequency(Bar bar) const;
  std::int64_t max_frequency() const;
  std::int64_t min_frequency() const;
  std::int64_t total() const;

 private:
  int min_diff_;
  int max_diff_;
  std::vector<std::int64_t> frequencies_;  // indexed by difference - min_diff_
};

BinTable bin_frequencies(int n);

enum class MembershipVariant {
  kMinMax,    // (f - min) / (max - min)
  kSmoothed,  // f / max, strictly positive
};

std::string_view to_string(MembershipVariant v);
MembershipVariant parse_membership_variant(std::string_view text);

struct MembershipDegree {
  Rational exact;
  // Set when max == min and min-max normalization is undefined; the degree
  // is then reported as 1.
  bool degenerate = false;

  double value() const { return to_double(exact); }
};

MembershipDegree membership(Bar bar, const BinTable& table,
                            MembershipVariant variant = MembershipVariant::kMinMax);

}  // namespace trustpat

#endif  // TRUSTPAT_RATIONALITY_OUTCOMES_HPP_

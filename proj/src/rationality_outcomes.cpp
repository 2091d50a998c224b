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

#include "trustpat/rationality_outcomes.hpp"

#include <algorithm>

namespace trustpat {

std::string_view to_string(RankClass c) {
  switch (c) {
    case RankClass::kReflexive:
      return "Reflexive";
    case RankClass::kIncreasing:
      return "Increasing";
    case RankClass::kDecreasing:
      return "Decreasing";
    case RankClass::kMixed:
      return "Mixed";
  }
  return "?";
}

std::string TauPattern::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (k) s += ",";
    s += slots[k].to_string();
  }
  return s + ")";
}

RankClass classify_rank(std::span<const RunCount> slots) {
  bool up = false;
  bool down = false;
  for (std::size_t k = 1; k < slots.size(); ++k) {
    if (slots[k] > slots[k - 1]) up = true;
    if (slots[k] < slots[k - 1]) down = true;
  }
  if (up && down) return RankClass::kMixed;
  if (up) return RankClass::kIncreasing;
  if (down) return RankClass::kDecreasing;
  return RankClass::kReflexive;
}

std::vector<TauPattern> build_tau(std::span<const int> objects_per_period) {
  if (objects_per_period.empty()) {
    throw DomainError("rationality outcome set needs at least one period");
  }
  for (int n : objects_per_period) {
    if (n < 2) throw DomainError("each period needs at least two objects");
  }
  // Odometer over {0..n_k-1}, last slot fastest.
  std::vector<int> digits(objects_per_period.size(), 0);
  std::vector<TauPattern> out;
  while (true) {
    TauPattern p;
    p.slots.reserve(digits.size());
    for (int d : digits) p.slots.emplace_back(d);
    p.rank_class = classify_rank(p.slots);
    if (p.slots.size() == 2) p.bar = bin_pattern(p.slots);
    out.push_back(std::move(p));

    std::size_t k = digits.size();
    while (k > 0) {
      --k;
      if (++digits[k] < objects_per_period[k]) break;
      digits[k] = 0;
      if (k == 0) return out;
    }
  }
}

TauCount count_tau_two_periods(int n) {
  if (n < 2) throw DomainError("count needs n >= 2");
  const std::int64_t m = n;
  // Rising factorial [n]^2 = n(n+1), over 2!.
  return TauCount{m * (m - 1) / 2, m * (m + 1) / 2};
}

std::int64_t factorial_count_formula(int n) {
  if (n < 2) throw DomainError("count needs n >= 2");
  std::int64_t fact = 1;
  for (int k = 2; k <= n - 1; ++k) fact *= k;
  const std::int64_t m = n;
  return fact + m * (m + 1) / 2;
}

Bar bin_pattern(std::span<const RunCount> slots) {
  if (slots.size() != 2) {
    throw DomainError("bars are defined for two-period patterns only");
  }
  return Bar{slots[1].value() - slots[0].value()};
}

Bar bin_pattern(const TauPattern& p) { return bin_pattern(p.slots); }

BinTable::BinTable(int objects_first, int objects_second) {
  if (objects_first < 2 || objects_second < 2) {
    throw DomainError("bin table needs at least two objects per period");
  }
  min_diff_ = -(objects_first - 1);
  max_diff_ = objects_second - 1;
  frequencies_.assign(static_cast<std::size_t>(max_diff_ - min_diff_ + 1), 0);
  for (int a = 0; a < objects_first; ++a) {
    for (int b = 0; b < objects_second; ++b) {
      ++frequencies_[static_cast<std::size_t>(b - a - min_diff_)];
    }
  }
}

std::vector<Bar> BinTable::bars() const {
  std::vector<Bar> out;
  for (int d = -1; d >= min_diff_; --d) out.push_back(Bar{d});
  out.push_back(Bar{0});
  for (int d = 1; d <= max_diff_; ++d) out.push_back(Bar{d});
  return out;
}

std::string BinTable::label(Bar bar) const {
  if (!contains(bar)) throw DomainError("bar outside table");
  const int d = bar.difference;
  if (bar_count() <= 26) {
    const int index = d < 0 ? -d - 1 : -min_diff_ + d;
    return std::string(1, static_cast<char>('A' + index));
  }
  return d == 0 ? std::string("d0")
                : (d > 0 ? "d+" : "d") + std::to_string(d);
}

std::optional<Bar> BinTable::find(std::string_view label_text) const {
  for (Bar b : bars()) {
    if (label(b) == label_text) return b;
  }
  return std::nullopt;
}

std::int64_t BinTable::frequency(Bar bar) const {
  if (!contains(bar)) throw DomainError("bar outside table");
  return frequencies_[static_cast<std::size_t>(bar.difference - min_diff_)];
}

std::int64_t BinTable::max_frequency() const {
  return *std::max_element(frequencies_.begin(), frequencies_.end());
}

std::int64_t BinTable::min_frequency() const {
  return *std::min_element(frequencies_.begin(), frequencies_.end());
}

std::int64_t BinTable::total() const {
  std::int64_t s = 0;
  for (auto f : frequencies_) s += f;
  return s;
}

BinTable bin_frequencies(int n) { return BinTable(n, n); }

std::string_view to_string(MembershipVariant v) {
  return v == MembershipVariant::kMinMax ? "minmax" : "smoothed";
}

MembershipVariant parse_membership_variant(std::string_view text) {
  if (text == "minmax") return MembershipVariant::kMinMax;
  if (text == "smoothed") return MembershipVariant::kSmoothed;
  throw DomainError("unknown membership variant '" + std::string(text) + "'");
}

MembershipDegree membership(Bar bar, const BinTable& table,
                            MembershipVariant variant) {
  const std::int64_t f = table.frequency(bar);
  const std::int64_t hi = table.max_frequency();
  if (variant == MembershipVariant::kSmoothed) {
    return MembershipDegree{Rational(f, hi), false};
  }
  const std::int64_t lo = table.min_frequency();
  if (hi == lo) return MembershipDegree{Rational(1), true};
  return MembershipDegree{Rational(f - lo, hi - lo), false};
}

}  // namespace trustpat

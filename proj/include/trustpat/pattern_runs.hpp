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

// Run patterns: how many objects each object beat in each period, read off
// the flattened preference pattern with the stop/run scanning rules.

#ifndef TRUSTPAT_PATTERN_RUNS_HPP_
#define TRUSTPAT_PATTERN_RUNS_HPP_

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "trustpat/choice_model.hpp"
#include "trustpat/common.hpp"
#include "trustpat/preference_graph.hpp"

namespace trustpat {

// ε or a positive run length k (displayed in unary as k ones). Orders with
// ε below every k, i.e. ε compares as 0.
class RunCount {
 public:
  constexpr RunCount() = default;
  // 0 normalizes to ε.
  constexpr explicit RunCount(int k) : k_(k < 0 ? 0 : k) {}
  static constexpr RunCount epsilon() { return RunCount(); }

  constexpr bool is_epsilon() const { return k_ == 0; }
  // Numeric value with ε as 0.
  constexpr int value() const { return k_; }

  std::string to_string() const;  // "ε" or "3"
  std::string unary() const;      // "ε" or "111"

  friend constexpr auto operator<=>(RunCount, RunCount) = default;

 private:
  int k_ = 0;
};

struct RunPattern {
  ObjectId object;
  std::vector<RunCount> slots;
  // absent[k]: object was not in period k's attainable set.
  std::vector<bool> absent;

  std::size_t periods() const { return slots.size(); }
  std::string to_string() const;  // "{3,ε}"
};

// One maximal stop or run token of the scanned stream.
struct PatternToken {
  enum class Kind { kStop, kRun };
  Kind kind;
  std::size_t length;
  // Slot (row) index, period-major, that the token lies in.
  std::size_t slot;
};

// Splits the stream into maximal 0-blocks (stops) and 1-blocks (runs). Tokens
// never span two rows, so each run belongs to exactly one slot.
std::vector<PatternToken> tokenize(const PatternVector& p);

// Per-slot run totals, length t·n, period-major. A row of n zeros yields 0;
// 1s seen before any stop are not counted.
std::vector<int> scan_runs(const PatternVector& p);

// Run pattern of one object across the given periods. Episodes must have
// strictly increasing periods; the object must appear in at least one.
RunPattern omega(std::span<const ValidatedEpisode> episodes,
                 const ObjectId& object);

// Every object appearing in any episode, first-seen order (new objects are
// appended at the end as catalogs change).
std::vector<ObjectId> object_universe(std::span<const ValidatedEpisode> episodes);

// L_R for one period of n objects: (n-1, n-2, ..., 1).
std::vector<int> single_period_rationality_pattern(int n);

// True when some slot of some pattern is non-ε, which every episode set with
// at least one strict preference must satisfy.
bool has_revealed_preference(std::span<const RunPattern> patterns);

}  // namespace trustpat

#endif  // TRUSTPAT_PATTERN_RUNS_HPP_

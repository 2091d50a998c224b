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

#include "trustpat/pattern_runs.hpp"

#include <algorithm>

namespace trustpat {

std::string RunCount::to_string() const {
  return is_epsilon() ? std::string("ε") : std::to_string(k_);
}

std::string RunCount::unary() const {
  return is_epsilon() ? std::string("ε") : std::string(k_, '1');
}

std::string RunPattern::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (k) s += ",";
    s += slots[k].to_string();
  }
  return s + "}";
}

std::vector<PatternToken> tokenize(const PatternVector& p) {
  std::vector<PatternToken> tokens;
  const std::size_t n = p.objects();
  auto bits = p.bits();
  for (std::size_t pos = 0; pos < bits.size(); ++pos) {
    const auto kind =
        bits[pos] ? PatternToken::Kind::kRun : PatternToken::Kind::kStop;
    const std::size_t slot = pos / n;
    if (!tokens.empty() && tokens.back().kind == kind &&
        tokens.back().slot == slot) {
      ++tokens.back().length;
    } else {
      tokens.push_back({kind, 1, slot});
    }
  }
  return tokens;
}

std::vector<int> scan_runs(const PatternVector& p) {
  std::vector<int> runs(p.periods() * p.objects(), 0);
  bool stopped = false;
  for (const auto& tok : tokenize(p)) {
    if (tok.kind == PatternToken::Kind::kStop) {
      // Rule (i): a stop opens counting for the runs that follow it.
      stopped = true;
    } else if (stopped) {
      runs[tok.slot] += static_cast<int>(tok.length);
    }
    // Rule (iii): a run with no preceding stop opens nothing.
  }
  return runs;
}

std::vector<ObjectId> object_universe(
    std::span<const ValidatedEpisode> episodes) {
  std::vector<ObjectId> out;
  for (const auto& e : episodes) {
    for (const auto& id : e.attainable()) {
      if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
    }
  }
  return out;
}

RunPattern omega(std::span<const ValidatedEpisode> episodes,
                 const ObjectId& object) {
  for (std::size_t k = 1; k < episodes.size(); ++k) {
    if (episodes[k].period() <= episodes[k - 1].period()) {
      throw DomainError("episodes must be sorted by strictly increasing period");
    }
  }
  RunPattern out{object, {}, {}};
  bool seen = false;
  for (const auto& e : episodes) {
    const int idx = e.index_of(object);
    if (idx < 0) {
      out.slots.push_back(RunCount::epsilon());
      out.absent.push_back(true);
      continue;
    }
    seen = true;
    const auto runs = scan_runs(flatten(derive_matrix(e)));
    out.slots.push_back(RunCount(runs[static_cast<std::size_t>(idx)]));
    out.absent.push_back(false);
  }
  if (!seen) throw UnknownObject(object);
  return out;
}

std::vector<int> single_period_rationality_pattern(int n) {
  if (n < 2) throw DomainError("L_R needs at least two objects");
  std::vector<int> out;
  for (int k = n - 1; k >= 1; --k) out.push_back(k);
  return out;
}

bool has_revealed_preference(std::span<const RunPattern> patterns) {
  return std::any_of(patterns.begin(), patterns.end(), [](const RunPattern& p) {
    return std::any_of(p.slots.begin(), p.slots.end(),
                       [](RunCount c) { return !c.is_epsilon(); });
  });
}

}  // namespace trustpat

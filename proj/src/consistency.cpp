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

#include "trustpat/consistency.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace trustpat {

ChoiceObservations::ChoiceObservations(std::vector<ObjectId> ground_set)
    : ground_(std::move(ground_set)) {
  if (ground_.empty()) throw DomainError("ground set is empty");
  if (ground_.size() > kMaxGroundSet) {
    throw DomainError("ground set larger than " +
                      std::to_string(kMaxGroundSet) + " elements");
  }
  for (std::size_t i = 0; i < ground_.size(); ++i) {
    for (std::size_t j = i + 1; j < ground_.size(); ++j) {
      if (ground_[i] == ground_[j]) {
        throw DomainError("duplicate ground-set element '" + ground_[i] + "'");
      }
    }
  }
  choices_.assign(std::size_t{1} << ground_.size(), -1);
}

Subset ChoiceObservations::mask_of(const std::vector<ObjectId>& ids) const {
  Subset s = 0;
  for (const auto& id : ids) {
    auto it = std::find(ground_.begin(), ground_.end(), id);
    if (it == ground_.end()) throw UnknownObject(id);
    s |= Subset{1} << (it - ground_.begin());
  }
  return s;
}

std::vector<ObjectId> ChoiceObservations::ids_of(Subset s) const {
  std::vector<ObjectId> out;
  for (std::size_t i = 0; i < ground_.size(); ++i) {
    if (s >> i & 1u) out.push_back(ground_[i]);
  }
  return out;
}

void ChoiceObservations::record(const std::vector<ObjectId>& subset,
                                const ObjectId& chosen) {
  const Subset s = mask_of(subset);
  const Subset c = mask_of({chosen});
  record(s, static_cast<std::size_t>(std::countr_zero(c)));
}

void ChoiceObservations::record(Subset subset, std::size_t chosen_index) {
  if (subset == 0 || subset >= choices_.size()) {
    throw DomainError("subset must be a nonempty subset of the ground set");
  }
  if (chosen_index >= ground_.size() || !(subset >> chosen_index & 1u)) {
    throw DomainError("chosen element is not a member of its subset");
  }
  choices_[subset] = static_cast<int>(chosen_index);
}

std::size_t ChoiceObservations::choice(Subset s) const {
  if (s == 0 || s >= choices_.size() || choices_[s] < 0) {
    throw DomainError("no choice recorded for this subset");
  }
  return static_cast<std::size_t>(choices_[s]);
}

std::vector<Subset> ChoiceObservations::recorded() const {
  std::vector<Subset> out;
  for (Subset s = 1; s < choices_.size(); ++s) {
    if (choices_[s] >= 0) out.push_back(s);
  }
  return out;
}

std::vector<Subset> ChoiceObservations::missing() const {
  std::vector<Subset> out;
  for (Subset s = 1; s < choices_.size(); ++s) {
    if (choices_[s] < 0) out.push_back(s);
  }
  return out;
}

namespace {

std::string describe_missing(const std::vector<std::vector<ObjectId>>& miss) {
  std::string msg = "choice table is missing " + std::to_string(miss.size()) +
                    " subset(s):";
  for (const auto& s : miss) {
    msg += " {";
    for (std::size_t i = 0; i < s.size(); ++i) msg += (i ? "," : "") + s[i];
    msg += "}";
  }
  return msg;
}

std::vector<std::vector<ObjectId>> missing_ids(const ChoiceObservations& obs) {
  std::vector<std::vector<ObjectId>> out;
  for (Subset s : obs.missing()) out.push_back(obs.ids_of(s));
  return out;
}

}  // namespace

IncompleteTable::IncompleteTable(std::vector<std::vector<ObjectId>> missing)
    : Error("IncompleteTable", describe_missing(missing)),
      missing_(std::move(missing)) {}

ChoiceFunctionTable::ChoiceFunctionTable(ChoiceObservations observations)
    : obs_(std::move(observations)) {
  if (!obs_.missing().empty()) throw IncompleteTable(missing_ids(obs_));
}

namespace {

// Maximizer of a ranking (rank[i] = position of element i, 0 is best).
std::size_t best_in(Subset s, const std::vector<std::size_t>& rank) {
  std::size_t best = 0;
  bool found = false;
  for (std::size_t i = 0; i < rank.size(); ++i) {
    if (!(s >> i & 1u)) continue;
    if (!found || rank[i] < rank[best]) {
      best = i;
      found = true;
    }
  }
  return best;
}

}  // namespace

ChoiceFunctionTable ChoiceFunctionTable::from_order(
    const std::vector<ObjectId>& order) {
  ChoiceObservations obs(order);
  std::vector<std::size_t> rank(order.size());
  std::iota(rank.begin(), rank.end(), 0);
  for (Subset s = 1; s < (Subset{1} << order.size()); ++s) {
    obs.record(s, best_in(s, rank));
  }
  return ChoiceFunctionTable(std::move(obs));
}

ContractionResult check_contraction(const ChoiceObservations& obs) {
  ContractionResult out;
  const auto subsets = obs.recorded();
  for (Subset larger : subsets) {
    const Subset chosen = Subset{1} << obs.choice(larger);
    for (Subset smaller : subsets) {
      if ((smaller & larger) != smaller) continue;  // not X1 ⊆ X2
      if (!(smaller & chosen)) continue;            // C(X2) ∉ X1
      if (obs.choice(smaller) != obs.choice(larger)) {
        out.violations.push_back({smaller, larger});
      }
    }
  }
  out.consistent = out.violations.empty();
  return out;
}

ContractionResult check_contraction(const ChoiceFunctionTable& table) {
  return check_contraction(table.observations());
}

std::optional<std::vector<ObjectId>> rationalizable(
    const ChoiceObservations& obs) {
  const auto subsets = obs.recorded();
  std::vector<std::size_t> order(obs.size());  // best first
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> rank(obs.size());
  do {
    for (std::size_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = pos;
    const bool ok = std::all_of(subsets.begin(), subsets.end(), [&](Subset s) {
      return best_in(s, rank) == obs.choice(s);
    });
    if (ok) {
      std::vector<ObjectId> ids;
      for (auto i : order) ids.push_back(obs.ground_set()[i]);
      return ids;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

std::optional<std::vector<ObjectId>> rationalizable(
    const ChoiceFunctionTable& table) {
  return rationalizable(table.observations());
}

std::string_view to_string(Lemma2Class c) {
  switch (c) {
    case Lemma2Class::kStrong:
      return "Strong";
    case Lemma2Class::kWeak:
      return "Weak";
    case Lemma2Class::kNeither:
      return "Neither";
  }
  return "?";
}

Lemma2Class classify_lemma2(RunCount first, RunCount second) {
  if (first.is_epsilon() || second.is_epsilon()) {
    throw DomainError("consistency class needs the object in both periods");
  }
  if (second.value() == first.value() + 1) return Lemma2Class::kStrong;
  if (first.value() == second.value() + 1) return Lemma2Class::kWeak;
  return Lemma2Class::kNeither;
}

}  // namespace trustpat

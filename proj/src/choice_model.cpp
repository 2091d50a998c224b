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

#include "trustpat/choice_model.hpp"

#include <algorithm>
#include <unordered_set>

namespace trustpat {

AttributeVector::AttributeVector(std::vector<std::int64_t> values)
    : values_(std::move(values)) {
  for (std::int64_t v : values_) {
    if (v < 0) throw DomainError("attribute values must be non-negative");
  }
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::kLessEqual:
      return "<=";
    case Relation::kEqual:
      return "=";
    case Relation::kGreaterEqual:
      return ">=";
  }
  return "?";
}

Relation parse_relation(std::string_view text) {
  if (text == "<=" || text == "≤") return Relation::kLessEqual;
  if (text == "=" || text == "==") return Relation::kEqual;
  if (text == ">=" || text == "≥") return Relation::kGreaterEqual;
  throw DomainError("unknown relation '" + std::string(text) + "'");
}

bool ConstraintRow::satisfied_by(const AttributeVector& x) const {
  if (x.dimension() != coefficients.size()) {
    throw DimensionError("constraint has " +
                         std::to_string(coefficients.size()) +
                         " coefficients but object has " +
                         std::to_string(x.dimension()) + " attributes");
  }
  Rational lhs = 0;
  auto values = x.values();
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    lhs += coefficients[k] * values[k];
  }
  switch (relation) {
    case Relation::kLessEqual:
      return lhs <= bound;
    case Relation::kEqual:
      return lhs == bound;
    case Relation::kGreaterEqual:
      return lhs >= bound;
  }
  return false;
}

std::vector<ObjectId> attainable_set(const Catalog& catalog,
                                     std::span<const ConstraintRow> constraints) {
  // Reject mismatches up front so a partial result is never returned.
  for (const auto& entry : catalog) {
    for (const auto& row : constraints) {
      if (row.coefficients.size() != entry.attributes.dimension()) {
        throw DimensionError("object '" + entry.id + "' has dimension " +
                             std::to_string(entry.attributes.dimension()) +
                             ", constraint has " +
                             std::to_string(row.coefficients.size()));
      }
    }
  }
  std::vector<ObjectId> out;
  for (const auto& entry : catalog) {
    bool ok = std::all_of(constraints.begin(), constraints.end(),
                          [&](const ConstraintRow& row) {
                            return row.satisfied_by(entry.attributes);
                          });
    if (ok) out.push_back(entry.id);
  }
  return out;
}

std::string_view to_string(Stage s) {
  switch (s) {
    case Stage::kAttainable:
      return "attainable";
    case Stage::kWishlist:
      return "wishlist";
    case Stage::kCart:
      return "cart";
    case Stage::kFinal:
      return "final";
  }
  return "?";
}

NestingError::NestingError(Stage stage, ObjectId item)
    : EpisodeError("NestingError",
                   "item '" + item + "' in " + std::string(to_string(stage)) +
                       " is not in the enclosing stage"),
      stage_(stage),
      item_(std::move(item)) {}

int ValidatedEpisode::index_of(const ObjectId& object) const {
  const auto& x = episode_.attainable;
  auto it = std::find(x.begin(), x.end(), object);
  return it == x.end() ? -1 : static_cast<int>(it - x.begin());
}

namespace {

void require_unique(const std::vector<ObjectId>& ids, Stage stage) {
  std::unordered_set<std::string_view> seen;
  for (const auto& id : ids) {
    if (!seen.insert(id).second) {
      throw EpisodeError("DuplicateObject",
                         "object '" + id + "' listed twice in " +
                             std::string(to_string(stage)));
    }
  }
}

void require_subset(const std::vector<ObjectId>& inner,
                    const std::vector<ObjectId>& outer, Stage inner_stage) {
  for (const auto& id : inner) {
    if (std::find(outer.begin(), outer.end(), id) == outer.end()) {
      throw NestingError(inner_stage, id);
    }
  }
}

}  // namespace

ValidatedEpisode validate_episode(ChoiceEpisode episode) {
  if (episode.period < 1) {
    throw EpisodeError("BadPeriod", "period must be a positive integer");
  }
  if (episode.attainable.empty()) {
    throw EpisodeError("EmptyAttainable", "attainable set is empty");
  }
  require_unique(episode.attainable, Stage::kAttainable);
  require_unique(episode.wishlist, Stage::kWishlist);
  require_unique(episode.cart, Stage::kCart);
  require_unique(episode.final_choice, Stage::kFinal);

  require_subset(episode.wishlist, episode.attainable, Stage::kWishlist);
  require_subset(episode.cart, episode.wishlist, Stage::kCart);
  require_subset(episode.final_choice, episode.cart, Stage::kFinal);
  if (episode.final_choice.empty()) throw EmptyFinal();

  std::vector<int> ranks(episode.attainable.size(), 0);
  auto bump = [&](const std::vector<ObjectId>& stage_set, int rank) {
    for (const auto& id : stage_set) {
      auto it = std::find(episode.attainable.begin(), episode.attainable.end(),
                          id);
      ranks[it - episode.attainable.begin()] = rank;
    }
  };
  bump(episode.wishlist, 1);
  bump(episode.cart, 2);
  bump(episode.final_choice, 3);
  return ValidatedEpisode(std::move(episode), std::move(ranks));
}

int stage_rank(const ValidatedEpisode& episode, const ObjectId& object) {
  int idx = episode.index_of(object);
  if (idx < 0) throw UnknownObject(object);
  return episode.rank_at(static_cast<std::size_t>(idx));
}

}  // namespace trustpat

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

// The four-stage purchase process: attainable set X, wishlist W, cart A and
// final choice S, with S ⊆ A ⊆ W ⊆ X.

#ifndef TRUSTPAT_CHOICE_MODEL_HPP_
#define TRUSTPAT_CHOICE_MODEL_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trustpat/common.hpp"

namespace trustpat {

// Point in the discrete attribute space; all entries are non-negative.
class AttributeVector {
 public:
  AttributeVector() = default;
  explicit AttributeVector(std::vector<std::int64_t> values);

  std::size_t dimension() const { return values_.size(); }
  std::span<const std::int64_t> values() const { return values_; }

 private:
  std::vector<std::int64_t> values_;
};

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

std::string_view to_string(Relation r);
Relation parse_relation(std::string_view text);

// One row of A·y {≤,=,≥} b.
struct ConstraintRow {
  std::vector<Rational> coefficients;
  Relation relation = Relation::kLessEqual;
  Rational bound;

  bool satisfied_by(const AttributeVector& x) const;
};

struct CatalogEntry {
  ObjectId id;
  AttributeVector attributes;
};

using Catalog = std::vector<CatalogEntry>;

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& msg)
      : Error("DimensionError", msg) {}
};

// Ids of catalog entries satisfying every row, in catalog order.
std::vector<ObjectId> attainable_set(const Catalog& catalog,
                                     std::span<const ConstraintRow> constraints);

enum class Stage { kAttainable, kWishlist, kCart, kFinal };

std::string_view to_string(Stage s);

struct ChoiceEpisode {
  std::string reviewer_id;
  int period = 1;
  std::vector<ObjectId> attainable;
  std::vector<ObjectId> wishlist;
  std::vector<ObjectId> cart;
  std::vector<ObjectId> final_choice;
};

class EpisodeError : public Error {
 public:
  using Error::Error;
};

// An item listed in `stage` is missing from the enclosing stage.
class NestingError : public EpisodeError {
 public:
  NestingError(Stage stage, ObjectId item);
  Stage stage() const noexcept { return stage_; }
  const ObjectId& item() const noexcept { return item_; }

 private:
  Stage stage_;
  ObjectId item_;
};

class EmptyFinal : public EpisodeError {
 public:
  EmptyFinal() : EpisodeError("EmptyFinal", "final choice set is empty") {}
};

// An episode whose nesting has been certified. Only validate_episode builds
// one, so holding a ValidatedEpisode is proof of the invariants.
class ValidatedEpisode {
 public:
  const std::string& reviewer_id() const { return episode_.reviewer_id; }
  int period() const { return episode_.period; }
  const std::vector<ObjectId>& attainable() const {
    return episode_.attainable;
  }
  const ChoiceEpisode& raw() const { return episode_; }

  // Position of `object` in the catalog order, or -1.
  int index_of(const ObjectId& object) const;
  // Stage rank by catalog position.
  int rank_at(std::size_t index) const { return ranks_[index]; }

 private:
  friend ValidatedEpisode validate_episode(ChoiceEpisode episode);
  ValidatedEpisode(ChoiceEpisode episode, std::vector<int> ranks)
      : episode_(std::move(episode)), ranks_(std::move(ranks)) {}

  ChoiceEpisode episode_;
  std::vector<int> ranks_;
};

ValidatedEpisode validate_episode(ChoiceEpisode episode);

// 3 if in S, 2 if in A, 1 if in W, 0 otherwise.
int stage_rank(const ValidatedEpisode& episode, const ObjectId& object);

}  // namespace trustpat

#endif  // TRUSTPAT_CHOICE_MODEL_HPP_

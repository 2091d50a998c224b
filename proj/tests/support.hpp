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

// Shared fixtures for the unit tests and the acceptance runner.

#ifndef TRUSTPAT_TESTS_SUPPORT_HPP_
#define TRUSTPAT_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "trustpat/choice_model.hpp"
#include "trustpat/trust_scoring.hpp"

namespace trustpat::testing {

inline ChoiceEpisode make_episode(std::string reviewer, int period,
                                  std::vector<ObjectId> catalog,
                                  std::vector<ObjectId> wishlist,
                                  std::vector<ObjectId> cart,
                                  std::vector<ObjectId> final_choice) {
  return ChoiceEpisode{std::move(reviewer), period,        std::move(catalog),
                       std::move(wishlist), std::move(cart),
                       std::move(final_choice)};
}

// Two shopping rounds over the catalog (M, N, V, Z): the first ends with M,
// the second reverses the order and ends with Z.
inline ChoiceEpisode canonical_first() {
  return make_episode("r1", 1, {"M", "N", "V", "Z"}, {"M", "N", "V"},
                      {"M", "N"}, {"M"});
}

inline ChoiceEpisode canonical_second() {
  return make_episode("r1", 2, {"M", "N", "V", "Z"}, {"Z", "V", "N"},
                      {"Z", "V"}, {"Z"});
}

inline std::vector<ValidatedEpisode> canonical_episodes() {
  return {validate_episode(canonical_first()),
          validate_episode(canonical_second())};
}

inline Review make_review(std::string object, int rating, Polarity polarity,
                          std::string comment = {}) {
  Review r;
  r.reviewer_id = "r1";
  r.object = std::move(object);
  r.rating = rating;
  r.polarity = polarity;
  r.comment = std::move(comment);
  return r;
}

inline std::vector<Review> canonical_reviews() {
  return {make_review("M", 1, Polarity::kNegative, "Bad product"),
          make_review("N", 2, Polarity::kNegative, "Not as described"),
          make_review("V", 3, Polarity::kPositive, "Does the job"),
          make_review("Z", 5, Polarity::kPositive, "Excellent")};
}

inline std::vector<ObjectId> object_names(int n) {
  std::vector<ObjectId> ids;
  for (int i = 0; i < n; ++i) ids.push_back("o" + std::to_string(i));
  return ids;
}

// Episode from explicit stage ranks (0..3) over a catalog; stages list their
// members in catalog order.
inline ChoiceEpisode episode_from_ranks(const std::vector<ObjectId>& catalog,
                                        const std::vector<int>& ranks,
                                        int period = 1) {
  ChoiceEpisode e;
  e.reviewer_id = "rx";
  e.period = period;
  e.attainable = catalog;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (ranks[i] >= 1) e.wishlist.push_back(catalog[i]);
    if (ranks[i] >= 2) e.cart.push_back(catalog[i]);
    if (ranks[i] >= 3) e.final_choice.push_back(catalog[i]);
  }
  return e;
}

// Random ranks with at least one object reaching the final stage.
inline std::vector<int> random_ranks(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> stage(0, 3);
  std::vector<int> ranks(static_cast<std::size_t>(n));
  for (auto& r : ranks) r = stage(rng);
  if (std::none_of(ranks.begin(), ranks.end(), [](int r) { return r == 3; })) {
    ranks[std::uniform_int_distribution<std::size_t>(0, ranks.size() - 1)(
        rng)] = 3;
  }
  return ranks;
}

// Distinct ranks drawn from {0..3}, top rank always present (n <= 4).
inline std::vector<int> random_chain_ranks(std::mt19937_64& rng, int n) {
  std::vector<int> pool{0, 1, 2};
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<int> ranks(pool.begin(), pool.begin() + (n - 1));
  ranks.push_back(3);
  std::shuffle(ranks.begin(), ranks.end(), rng);
  return ranks;
}

}  // namespace trustpat::testing

#endif  // TRUSTPAT_TESTS_SUPPORT_HPP_

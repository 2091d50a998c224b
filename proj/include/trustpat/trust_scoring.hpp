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

// Degree of trustworthiness for review comments, derived from the reviewer's
// own run patterns, plus the binomial overall-rationality distribution.
//
// Pipeline per reviewer (build_report):
//   1. build τ from the per-period catalog sizes;
//   2. scan every period's flattened preference pattern;
//   3. derive ω for every object;
//   4. locate ω in τ (rank class, bar);
//   5. read the membership degree of its bar;
// then attach zones, review polarity matches and the f(r) distribution.

#ifndef TRUSTPAT_TRUST_SCORING_HPP_
#define TRUSTPAT_TRUST_SCORING_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trustpat/choice_model.hpp"
#include "trustpat/common.hpp"
#include "trustpat/pattern_runs.hpp"
#include "trustpat/rationality_outcomes.hpp"

namespace trustpat {

enum class Polarity { kPositive, kNeutral, kNegative };

std::string_view to_string(Polarity p);
Polarity parse_polarity(std::string_view text);
// Fallback when a review carries no polarity: 1-2 negative, 3 neutral,
// 4-5 positive.
Polarity polarity_from_rating(int rating);

struct Review {
  std::string reviewer_id;
  ObjectId object;
  int rating = 3;
  Polarity polarity = Polarity::kNeutral;
  bool polarity_inferred = false;
  std::string comment;
};

// DomainError when the rating is outside 1..5.
void validate_review(const Review& review);

enum class Zone { kRational, kIrrational, kReflexive };

std::string_view to_string(Zone z);

struct ScoringOptions {
  MembershipVariant membership = MembershipVariant::kMinMax;
  // Whether the zero-difference bar counts toward the rational zone.
  bool reflexive_is_rational = true;
  Rational p = Rational(1, 2);
};

// Sign of slot2 - slot1. DomainError unless there are two slots.
Zone zone(std::span<const RunCount> slots);
Zone zone(const TauPattern& p);

bool counts_as_rational(Zone z, const ScoringOptions& options);

enum class Narrative {
  kCompleteRejection,         // (k, ε)
  kContinuityMaintainedDown,  // (k, j), k > j > 0
  kContinuityMaintainedUp,    // (k, j), 0 < k < j
  kSuddenAdoption,            // (ε, j)
  kDisputed,                  // review polarity contradicts the zone
  kStable,                    // equal slots
};

std::string_view to_string(Narrative n);

struct MatchVerdict {
  bool polarity_match = false;
  // Neutral reviews match any zone, weakly.
  bool weak = false;
  Narrative narrative = Narrative::kStable;
};

// Matches a review against a two-period pattern of the reviewed object.
MatchVerdict match_review(const Review& review,
                          std::span<const RunCount> slots,
                          const ScoringOptions& options = {});

// C(n,r) p^r (1-p)^(n-r), exact. DomainError when r or p is out of range.
Rational binomial_rationality(int n, int r, const Rational& p);
double binomial_rationality(int n, int r, double p);

struct OverallRationality {
  int n = 0;
  Rational p;
  // Objects of this reviewer in the rational zone.
  int realized_r = 0;
  std::vector<Rational> distribution;  // f(0..n)

  static OverallRationality make(int n, const Rational& p, int realized_r);

  const Rational& f(int r) const;
  Rational at_most(int r) const;      // f(r' <= r)
  Rational less_than(int r) const;    // f(r' < r)
  Rational more_than(int r) const;    // f(r' > r)
  Rational at_least(int r) const;     // f(r' >= r)
};

struct Annotation {
  std::string code;
  std::string message;
};

struct TrustAssessment {
  ObjectId object;
  RunPattern pattern;
  RankClass rank_class = RankClass::kReflexive;
  // Two-period fields.
  std::optional<Bar> bar;
  std::string bar_label;
  std::int64_t frequency = 0;
  std::optional<MembershipDegree> degree;
  std::optional<Zone> zone;
  std::vector<Annotation> annotations;
};

struct ReviewAssessment {
  Review review;
  // Index into ReviewerReport::objects, unset when the object is unknown.
  std::optional<std::size_t> assessment;
  std::optional<MatchVerdict> verdict;
  std::optional<std::string> error;
};

struct PeriodRuns {
  int period = 0;
  std::vector<ObjectId> order;
  std::string pattern;     // flattened U_t
  std::vector<int> runs;   // scan_runs per object
  bool acyclic = true;
};

struct ReviewerReport {
  std::string reviewer_id;
  std::vector<PeriodRuns> periods;
  // Concatenated pattern when every period shares the same catalog.
  std::optional<std::string> joint_pattern;
  std::vector<int> objects_per_period;
  std::vector<TrustAssessment> objects;
  std::vector<ReviewAssessment> reviews;
  std::optional<OverallRationality> overall;
  // Single-period input: outdegrees form exactly L_R.
  std::optional<bool> single_period_conformance;
  bool has_revealed_preference = false;
  std::vector<std::string> errors;
};

struct TrustReport {
  ScoringOptions options;
  std::vector<ReviewerReport> reviewers;
  // Reviews naming a reviewer with no episodes.
  std::vector<ReviewAssessment> orphan_reviews;

  bool has_errors() const;
};

TrustReport build_report(std::span<const ValidatedEpisode> episodes,
                         std::span<const Review> reviews,
                         const ScoringOptions& options = {});

// Degrees listed for the four-object, two-period worked example, keyed by bar
// label. The extreme bars C and G differ from what min-max normalization
// yields (0); reports annotate rather than reconcile the difference.
std::optional<std::string> reference_degree(int objects_first,
                                            int objects_second,
                                            std::string_view bar_label);

}  // namespace trustpat

#endif  // TRUSTPAT_TRUST_SCORING_HPP_

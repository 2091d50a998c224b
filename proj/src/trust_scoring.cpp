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

#include "trustpat/trust_scoring.hpp"

#include <algorithm>
#include <map>

#include "trustpat/preference_graph.hpp"

namespace trustpat {

using boost::multiprecision::cpp_int;

std::string_view to_string(Polarity p) {
  switch (p) {
    case Polarity::kPositive:
      return "positive";
    case Polarity::kNeutral:
      return "neutral";
    case Polarity::kNegative:
      return "negative";
  }
  return "?";
}

Polarity parse_polarity(std::string_view text) {
  if (text == "positive") return Polarity::kPositive;
  if (text == "neutral") return Polarity::kNeutral;
  if (text == "negative") return Polarity::kNegative;
  throw DomainError("unknown polarity '" + std::string(text) + "'");
}

Polarity polarity_from_rating(int rating) {
  if (rating <= 2) return Polarity::kNegative;
  if (rating == 3) return Polarity::kNeutral;
  return Polarity::kPositive;
}

void validate_review(const Review& review) {
  if (review.rating < 1 || review.rating > 5) {
    throw DomainError("rating " + std::to_string(review.rating) +
                      " for object '" + review.object + "' is outside 1..5");
  }
}

std::string_view to_string(Zone z) {
  switch (z) {
    case Zone::kRational:
      return "rational";
    case Zone::kIrrational:
      return "irrational";
    case Zone::kReflexive:
      return "reflexive";
  }
  return "?";
}

Zone zone(std::span<const RunCount> slots) {
  const int d = bin_pattern(slots).difference;
  if (d > 0) return Zone::kRational;
  if (d < 0) return Zone::kIrrational;
  return Zone::kReflexive;
}

Zone zone(const TauPattern& p) { return zone(p.slots); }

bool counts_as_rational(Zone z, const ScoringOptions& options) {
  return z == Zone::kRational ||
         (z == Zone::kReflexive && options.reflexive_is_rational);
}

std::string_view to_string(Narrative n) {
  switch (n) {
    case Narrative::kCompleteRejection:
      return "complete-rejection";
    case Narrative::kContinuityMaintainedDown:
      return "continuity-maintained-down";
    case Narrative::kContinuityMaintainedUp:
      return "continuity-maintained-up";
    case Narrative::kSuddenAdoption:
      return "sudden-adoption";
    case Narrative::kDisputed:
      return "disputed";
    case Narrative::kStable:
      return "stable";
  }
  return "?";
}

namespace {

Narrative shape_narrative(RunCount first, RunCount second) {
  if (first == second) return Narrative::kStable;
  if (second.is_epsilon()) return Narrative::kCompleteRejection;
  if (first.is_epsilon()) return Narrative::kSuddenAdoption;
  return first > second ? Narrative::kContinuityMaintainedDown
                        : Narrative::kContinuityMaintainedUp;
}

}  // namespace

MatchVerdict match_review(const Review& review,
                          std::span<const RunCount> slots,
                          const ScoringOptions& options) {
  const bool rational = counts_as_rational(zone(slots), options);
  MatchVerdict v;
  switch (review.polarity) {
    case Polarity::kPositive:
      v.polarity_match = rational;
      break;
    case Polarity::kNegative:
      v.polarity_match = !rational;
      break;
    case Polarity::kNeutral:
      v.polarity_match = true;
      v.weak = true;
      break;
  }
  v.narrative = v.polarity_match ? shape_narrative(slots[0], slots[1])
                                 : Narrative::kDisputed;
  return v;
}

Rational binomial_rationality(int n, int r, const Rational& p) {
  if (n < 0 || r < 0 || r > n) {
    throw DomainError("need 0 <= r <= n, got n=" + std::to_string(n) +
                      ", r=" + std::to_string(r));
  }
  if (p < 0 || p > 1) throw DomainError("probability outside [0, 1]");
  cpp_int choose = 1;
  for (int k = 1; k <= r; ++k) choose = choose * (n - r + k) / k;
  const Rational q = Rational(1) - p;
  Rational out(choose);
  for (int k = 0; k < r; ++k) out *= p;
  for (int k = 0; k < n - r; ++k) out *= q;
  return out;
}

double binomial_rationality(int n, int r, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("probability outside [0, 1]");
  }
  // Every finite double is an exact binary fraction.
  return to_double(binomial_rationality(n, r, Rational(p)));
}

OverallRationality OverallRationality::make(int n, const Rational& p,
                                            int realized_r) {
  OverallRationality o;
  o.n = n;
  o.p = p;
  o.realized_r = realized_r;
  for (int r = 0; r <= n; ++r) o.distribution.push_back(binomial_rationality(n, r, p));
  return o;
}

const Rational& OverallRationality::f(int r) const {
  if (r < 0 || r > n) throw DomainError("r outside 0..n");
  return distribution[static_cast<std::size_t>(r)];
}

Rational OverallRationality::at_most(int r) const {
  Rational s = 0;
  for (int k = 0; k <= std::min(r, n); ++k) s += distribution[k];
  return s;
}

Rational OverallRationality::less_than(int r) const { return at_most(r - 1); }

Rational OverallRationality::more_than(int r) const {
  return Rational(1) - at_most(r);
}

Rational OverallRationality::at_least(int r) const {
  return Rational(1) - at_most(r - 1);
}

std::optional<std::string> reference_degree(int objects_first,
                                            int objects_second,
                                            std::string_view bar_label) {
  if (objects_first != 4 || objects_second != 4) return std::nullopt;
  static const std::map<std::string, std::string, std::less<>> kTable = {
      {"A", "0.67"}, {"B", "0.33"}, {"C", "0.33"}, {"D", "1.00"},
      {"E", "0.67"}, {"F", "0.33"}, {"G", "0.33"},
  };
  auto it = kTable.find(bar_label);
  if (it == kTable.end()) return std::nullopt;
  return it->second;
}

bool TrustReport::has_errors() const {
  if (!orphan_reviews.empty()) return true;
  for (const auto& r : reviewers) {
    if (!r.errors.empty()) return true;
    for (const auto& rv : r.reviews) {
      if (rv.error) return true;
    }
  }
  return false;
}

namespace {

bool outdegrees_form_chain(const std::vector<int>& runs) {
  std::vector<int> sorted = runs;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] != static_cast<int>(k)) return false;
  }
  return true;
}

void score_reviewer(ReviewerReport& out,
                    std::vector<ValidatedEpisode> episodes,
                    const ScoringOptions& options) {
  std::stable_sort(episodes.begin(), episodes.end(),
                   [](const auto& a, const auto& b) {
                     return a.period() < b.period();
                   });

  std::vector<PreferenceMatrix> matrices;
  for (const auto& e : episodes) {
    auto m = derive_matrix(e);
    auto flat = flatten(m);
    out.periods.push_back(PeriodRuns{e.period(), e.attainable(),
                                     flat.to_string(), scan_runs(flat),
                                     is_acyclic(m)});
    out.objects_per_period.push_back(static_cast<int>(e.attainable().size()));
    matrices.push_back(std::move(m));
  }
  const bool shared_catalog = std::all_of(
      matrices.begin(), matrices.end(),
      [&](const auto& m) { return m.order() == matrices.front().order(); });
  if (shared_catalog) {
    out.joint_pattern = concat_patterns(matrices).to_string();
  }

  const std::size_t t = episodes.size();
  if (t == 1) {
    out.single_period_conformance = outdegrees_form_chain(out.periods[0].runs);
  }

  std::optional<BinTable> table;
  if (t == 2) {
    const int n1 = out.objects_per_period[0];
    const int n2 = out.objects_per_period[1];
    if (n1 >= 2 && n2 >= 2) {
      table.emplace(n1, n2);
    } else {
      out.errors.push_back(
          "two-period scoring needs at least two objects in each period");
    }
  }

  std::vector<RunPattern> patterns;
  int rational_count = 0;
  int zoned = 0;
  for (const auto& id : object_universe(episodes)) {
    TrustAssessment a;
    a.object = id;
    a.pattern = omega(episodes, id);
    a.rank_class = classify_rank(a.pattern.slots);
    for (std::size_t k = 0; k < t; ++k) {
      const int limit = out.objects_per_period[k] - 1;
      if (a.pattern.slots[k].value() > limit) {
        out.errors.push_back("pattern " + a.pattern.to_string() + " of '" +
                             id + "' is not in the outcome set");
      }
    }
    if (table) {
      a.bar = bin_pattern(a.pattern.slots);
      a.bar_label = table->label(*a.bar);
      a.frequency = table->frequency(*a.bar);
      a.degree = membership(*a.bar, *table, options.membership);
      a.zone = zone(a.pattern.slots);
      ++zoned;
      if (counts_as_rational(*a.zone, options)) ++rational_count;
      if (auto ref = reference_degree(out.objects_per_period[0],
                                      out.objects_per_period[1],
                                      a.bar_label);
          ref && format_fixed(a.degree->exact, 2) != *ref) {
        a.annotations.push_back(
            {"reference-degree-mismatch",
             "computed degree " + format_fixed(a.degree->exact) + " for bar " +
                 a.bar_label + " differs from the worked-example reference "
                 "table value " + *ref});
      }
      if (a.degree->degenerate) {
        a.annotations.push_back(
            {"degenerate-membership",
             "all bars share one frequency; degree reported as 1"});
      }
    }
    patterns.push_back(a.pattern);
    out.objects.push_back(std::move(a));
  }
  out.has_revealed_preference = has_revealed_preference(patterns);
  if (table) {
    out.overall = OverallRationality::make(zoned, options.p, rational_count);
  }
}

}  // namespace

TrustReport build_report(std::span<const ValidatedEpisode> episodes,
                         std::span<const Review> reviews,
                         const ScoringOptions& options) {
  if (options.p < 0 || options.p > 1) {
    throw DomainError("probability outside [0, 1]");
  }
  TrustReport report;
  report.options = options;

  std::vector<std::string> order;
  std::map<std::string, std::vector<ValidatedEpisode>> groups;
  for (const auto& e : episodes) {
    auto [it, inserted] = groups.try_emplace(e.reviewer_id());
    if (inserted) order.push_back(e.reviewer_id());
    it->second.push_back(e);
  }

  std::map<std::string, std::size_t> index;
  for (const auto& id : order) {
    ReviewerReport r;
    r.reviewer_id = id;
    try {
      score_reviewer(r, groups.at(id), options);
    } catch (const Error& err) {
      r.errors.push_back(err.kind() + ": " + err.what());
    }
    index[id] = report.reviewers.size();
    report.reviewers.push_back(std::move(r));
  }

  for (const auto& review : reviews) {
    ReviewAssessment ra;
    ra.review = review;
    auto it = index.find(review.reviewer_id);
    if (it == index.end()) {
      ra.error = "UnknownReviewer: no episodes for reviewer '" +
                 review.reviewer_id + "'";
      report.orphan_reviews.push_back(std::move(ra));
      continue;
    }
    ReviewerReport& r = report.reviewers[it->second];
    try {
      validate_review(review);
      auto obj = std::find_if(r.objects.begin(), r.objects.end(),
                              [&](const auto& a) {
                                return a.object == review.object;
                              });
      if (obj == r.objects.end()) throw UnknownObject(review.object);
      ra.assessment = static_cast<std::size_t>(obj - r.objects.begin());
      if (obj->zone) ra.verdict = match_review(review, obj->pattern.slots, options);
    } catch (const Error& err) {
      ra.error = err.kind() + ": " + err.what();
    }
    r.reviews.push_back(std::move(ra));
  }
  return report;
}

}  // namespace trustpat

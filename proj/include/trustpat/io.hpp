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

// Wire formats and report rendering.
//
// Episodes are JSON Lines, one record per line:
//   {"reviewer_id":"r1","period":1,"catalog":["M","N","V","Z"],
//    "wishlist":["M","N","V"],"cart":["M","N"],"final":["M"]}
// Reviews are one document:
//   {"reviews":[{"reviewer_id":"r1","object":"M","rating":1,
//                "polarity":"negative","comment":"Bad product"}]}
// `polarity` is optional and falls back to the rating.
// IFS lists:     {"elements":[{"id":"a","mu":0.5,"nu":0.5}]}
// Choice tables: {"ground_set":["a","b"],
//                 "choices":[{"subset":["a","b"],"chosen":"a"}, ...]}

#ifndef TRUSTPAT_IO_HPP_
#define TRUSTPAT_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "trustpat/choice_model.hpp"
#include "trustpat/consistency.hpp"
#include "trustpat/info_index.hpp"
#include "trustpat/trust_scoring.hpp"

namespace trustpat {

std::string_view library_version();

class ParseError : public Error {
 public:
  ParseError(int line, std::string field, const std::string& msg);
  int line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  int line_;
  std::string field_;
};

// A record that could not be used; the rest of the batch still is.
struct RecordError {
  std::string source;  // "episodes" or "reviews"
  int line = 0;        // 1-based line (episodes) or array index + 1 (reviews)
  std::string kind;
  std::string message;
};

struct EpisodeBatch {
  std::vector<ValidatedEpisode> episodes;
  std::vector<RecordError> errors;
  int records = 0;  // non-blank lines seen
};

// Single record; ParseError on malformed JSON or fields.
ChoiceEpisode parse_episode_record(std::string_view line, int line_number = 1);
std::string serialize_episode_record(const ChoiceEpisode& e);

// Blank lines and lines starting with '#' are skipped.
EpisodeBatch read_episodes(std::istream& in);

struct ReviewBatch {
  std::vector<Review> reviews;
  std::vector<RecordError> errors;
};

ReviewBatch read_reviews(std::istream& in);
std::string serialize_reviews(const std::vector<Review>& reviews);

IfsList read_ifs_list(std::istream& in);
std::string serialize_ifs_list(const IfsList& list);

ChoiceObservations read_choice_observations(std::istream& in);
std::string serialize_choice_observations(const ChoiceObservations& obs);

enum class Format { kJson, kCsv, kText };

std::string_view to_string(Format f);
Format parse_format(std::string_view text);

std::string render_report(const TrustReport& report,
                          const std::vector<RecordError>& input_errors,
                          Format format);

std::string render_tau(const std::vector<int>& objects_per_period,
                       MembershipVariant variant, Format format);

std::string render_info_index(const IfsList& list, Format format);

std::string render_check(const ChoiceObservations& obs, Format format);

}  // namespace trustpat

#endif  // TRUSTPAT_IO_HPP_

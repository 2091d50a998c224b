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

#include "trustpat/io.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <sstream>

#include "json.hpp"

#ifndef TRUSTPAT_VERSION
#define TRUSTPAT_VERSION "0.0.0-dev"
#endif

namespace trustpat {

using Json = nlohmann::ordered_json;

std::string_view library_version() { return TRUSTPAT_VERSION; }

namespace {

std::string parse_error_message(int line, const std::string& field,
                                const std::string& msg) {
  std::string out = "line " + std::to_string(line);
  if (!field.empty()) out += ", field '" + field + "'";
  return out + ": " + msg;
}

}  // namespace

ParseError::ParseError(int line, std::string field, const std::string& msg)
    : Error("ParseError", parse_error_message(line, field, msg)),
      line_(line),
      field_(std::move(field)) {}

// ---------------------------------------------------------------------------
// Parsing helpers

namespace {

Json parse_json(std::string_view text, int line) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(line, "", std::string("malformed JSON: ") + e.what());
  }
}

Json slurp(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};
  return parse_json(text, 1);
}

const Json& require(const Json& obj, const char* field, int line) {
  if (!obj.is_object()) throw ParseError(line, "", "expected a JSON object");
  auto it = obj.find(field);
  if (it == obj.end()) throw ParseError(line, field, "missing");
  return *it;
}

std::string get_string(const Json& obj, const char* field, int line) {
  const Json& v = require(obj, field, line);
  if (!v.is_string()) throw ParseError(line, field, "expected a string");
  return v.get<std::string>();
}

int get_int(const Json& obj, const char* field, int line) {
  const Json& v = require(obj, field, line);
  if (!v.is_number_integer()) {
    throw ParseError(line, field, "expected an integer");
  }
  return v.get<int>();
}

double get_number(const Json& obj, const char* field, int line) {
  const Json& v = require(obj, field, line);
  if (!v.is_number()) throw ParseError(line, field, "expected a number");
  return v.get<double>();
}

std::vector<std::string> get_strings(const Json& obj, const char* field,
                                     int line) {
  const Json& v = require(obj, field, line);
  if (!v.is_array()) throw ParseError(line, field, "expected an array");
  std::vector<std::string> out;
  for (const auto& item : v) {
    if (!item.is_string()) {
      throw ParseError(line, field, "expected an array of strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

// Accepts {"<key>": [...]} or a bare top-level array.
const Json& list_of(const Json& doc, const char* key) {
  if (doc.is_array()) return doc;
  if (doc.is_object()) {
    auto it = doc.find(key);
    if (it != doc.end() && it->is_array()) return *it;
  }
  throw ParseError(1, key, "expected an array or an object holding one");
}

bool skippable(std::string_view line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string_view::npos || line[pos] == '#';
}

}  // namespace

// ---------------------------------------------------------------------------
// Episodes

ChoiceEpisode parse_episode_record(std::string_view line, int line_number) {
  const Json j = parse_json(line, line_number);
  if (!j.is_object()) {
    throw ParseError(line_number, "", "expected a JSON object");
  }
  ChoiceEpisode e;
  e.reviewer_id = get_string(j, "reviewer_id", line_number);
  e.period = get_int(j, "period", line_number);
  e.attainable = get_strings(j, "catalog", line_number);
  e.wishlist = get_strings(j, "wishlist", line_number);
  e.cart = get_strings(j, "cart", line_number);
  e.final_choice = get_strings(j, "final", line_number);
  return e;
}

std::string serialize_episode_record(const ChoiceEpisode& e) {
  Json j;
  j["reviewer_id"] = e.reviewer_id;
  j["period"] = e.period;
  j["catalog"] = e.attainable;
  j["wishlist"] = e.wishlist;
  j["cart"] = e.cart;
  j["final"] = e.final_choice;
  return j.dump();
}

EpisodeBatch read_episodes(std::istream& in) {
  EpisodeBatch batch;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (skippable(line)) continue;
    ++batch.records;
    try {
      batch.episodes.push_back(
          validate_episode(parse_episode_record(line, number)));
    } catch (const ParseError& e) {
      batch.errors.push_back({"episodes", number, e.kind(), e.what()});
    } catch (const Error& e) {
      batch.errors.push_back({"episodes", number, e.kind(),
                              "line " + std::to_string(number) + ": " +
                                  e.what()});
    }
  }
  return batch;
}

// ---------------------------------------------------------------------------
// Reviews

ReviewBatch read_reviews(std::istream& in) {
  const Json doc = slurp(in);
  const Json& items = list_of(doc, "reviews");
  ReviewBatch batch;
  int index = 0;
  for (const auto& item : items) {
    ++index;
    try {
      Review r;
      r.reviewer_id = get_string(item, "reviewer_id", index);
      r.object = get_string(item, "object", index);
      r.rating = get_int(item, "rating", index);
      if (item.contains("comment")) r.comment = get_string(item, "comment", index);
      if (item.contains("polarity") && !item["polarity"].is_null()) {
        try {
          r.polarity = parse_polarity(get_string(item, "polarity", index));
        } catch (const DomainError& e) {
          throw ParseError(index, "polarity", e.what());
        }
      } else {
        r.polarity = polarity_from_rating(r.rating);
        r.polarity_inferred = true;
      }
      validate_review(r);
      batch.reviews.push_back(std::move(r));
    } catch (const ParseError& e) {
      batch.errors.push_back({"reviews", index, e.kind(), e.what()});
    } catch (const Error& e) {
      batch.errors.push_back({"reviews", index, e.kind(),
                              "review " + std::to_string(index) + ": " +
                                  e.what()});
    }
  }
  return batch;
}

std::string serialize_reviews(const std::vector<Review>& reviews) {
  Json arr = Json::array();
  for (const auto& r : reviews) {
    Json j;
    j["reviewer_id"] = r.reviewer_id;
    j["object"] = r.object;
    j["rating"] = r.rating;
    if (!r.polarity_inferred) j["polarity"] = std::string(to_string(r.polarity));
    j["comment"] = r.comment;
    arr.push_back(std::move(j));
  }
  Json doc;
  doc["reviews"] = std::move(arr);
  return doc.dump(2);
}

// ---------------------------------------------------------------------------
// IFS lists and choice tables

IfsList read_ifs_list(std::istream& in) {
  const Json doc = slurp(in);
  IfsList out;
  int index = 0;
  for (const auto& item : list_of(doc, "elements")) {
    ++index;
    IfsElement e{get_string(item, "id", index), get_number(item, "mu", index),
                 get_number(item, "nu", index)};
    validate(e);
    out.push_back(std::move(e));
  }
  return out;
}

std::string serialize_ifs_list(const IfsList& list) {
  Json arr = Json::array();
  for (const auto& e : list) {
    Json j;
    j["id"] = e.id;
    j["mu"] = e.mu;
    j["nu"] = e.nu;
    arr.push_back(std::move(j));
  }
  Json doc;
  doc["elements"] = std::move(arr);
  return doc.dump(2);
}

ChoiceObservations read_choice_observations(std::istream& in) {
  const Json doc = slurp(in);
  ChoiceObservations obs(get_strings(doc, "ground_set", 1));
  const Json& choices = require(doc, "choices", 1);
  if (!choices.is_array()) throw ParseError(1, "choices", "expected an array");
  int index = 0;
  for (const auto& item : choices) {
    ++index;
    auto subset = get_strings(item, "subset", index);
    auto chosen = get_string(item, "chosen", index);
    try {
      obs.record(subset, chosen);
    } catch (const Error& e) {
      throw ParseError(index, "chosen", e.what());
    }
  }
  return obs;
}

std::string serialize_choice_observations(const ChoiceObservations& obs) {
  Json doc;
  doc["ground_set"] = obs.ground_set();
  Json arr = Json::array();
  for (Subset s : obs.recorded()) {
    Json j;
    j["subset"] = obs.ids_of(s);
    j["chosen"] = obs.ground_set()[obs.choice(s)];
    arr.push_back(std::move(j));
  }
  doc["choices"] = std::move(arr);
  return doc.dump(2);
}

// ---------------------------------------------------------------------------
// Formats

std::string_view to_string(Format f) {
  switch (f) {
    case Format::kJson:
      return "json";
    case Format::kCsv:
      return "csv";
    case Format::kText:
      return "text";
  }
  return "?";
}

Format parse_format(std::string_view text) {
  if (text == "json") return Format::kJson;
  if (text == "csv") return Format::kCsv;
  if (text == "text") return Format::kText;
  throw DomainError("unknown format '" + std::string(text) + "'");
}

namespace {

std::string quote(const std::string& s) {
  return Json(s).dump(-1, ' ', false, Json::error_handler_t::replace);
}

// Pretty JSON writer with caller-controlled field order. Numbers are written
// verbatim so that fixed-precision strings survive untouched.
class JsonWriter {
 public:
  JsonWriter& begin_object() { return open('{'); }
  JsonWriter& end_object() { return close('}'); }
  JsonWriter& begin_array() { return open('['); }
  JsonWriter& end_array() { return close(']'); }

  JsonWriter& key(const std::string& k) {
    separate();
    out_ += quote(k) + ": ";
    after_key_ = true;
    return *this;
  }
  JsonWriter& raw(const std::string& text) {
    separate();
    out_ += text;
    return *this;
  }
  JsonWriter& str(const std::string& s) { return raw(quote(s)); }
  JsonWriter& boolean(bool b) { return raw(b ? "true" : "false"); }
  JsonWriter& null() { return raw("null"); }
  JsonWriter& integer(std::int64_t v) { return raw(std::to_string(v)); }
  JsonWriter& number(const Rational& v) { return raw(format_fixed(v)); }
  JsonWriter& number(double v) { return raw(format_fixed(v)); }

  template <typename T>
  JsonWriter& field(const std::string& k, const T& v);

  std::string finish() { return out_ + "\n"; }

 private:
  JsonWriter& open(char c) {
    separate();
    out_ += c;
    first_.push_back(true);
    return *this;
  }
  JsonWriter& close(char c) {
    const bool empty = first_.back();
    first_.pop_back();
    if (!empty) newline();
    out_ += c;
    return *this;
  }
  void separate() {
    if (after_key_) {
      after_key_ = false;
      return;
    }
    if (first_.empty()) return;
    if (!first_.back()) out_ += ',';
    first_.back() = false;
    newline();
  }
  void newline() {
    out_ += '\n';
    out_.append(2 * first_.size(), ' ');
  }

  std::string out_;
  std::vector<bool> first_;
  bool after_key_ = false;
};

template <>
JsonWriter& JsonWriter::field(const std::string& k, const std::string& v) {
  return key(k).str(v);
}
template <>
JsonWriter& JsonWriter::field(const std::string& k, const bool& v) {
  return key(k).boolean(v);
}
template <>
JsonWriter& JsonWriter::field(const std::string& k, const int& v) {
  return key(k).integer(v);
}
template <>
JsonWriter& JsonWriter::field(const std::string& k, const std::int64_t& v) {
  return key(k).integer(v);
}
template <>
JsonWriter& JsonWriter::field(const std::string& k, const Rational& v) {
  return key(k).number(v);
}

void write_strings(JsonWriter& w, const std::vector<std::string>& xs) {
  w.begin_array();
  for (const auto& x : xs) w.str(x);
  w.end_array();
}

void write_ints(JsonWriter& w, const std::vector<int>& xs) {
  w.begin_array();
  for (int x : xs) w.integer(x);
  w.end_array();
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += csv_cell(cells[i]);
  }
  return out + "\n";
}

// Left-aligned columns separated by two spaces.
std::string text_table(const std::vector<std::vector<std::string>>& rows,
                       const std::string& indent = "") {
  std::vector<std::size_t> width;
  auto display_width = [](const std::string& s) {
    // Count code points so that "ε" occupies one column.
    return static_cast<std::size_t>(std::count_if(
        s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
  };
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], display_width(row[i]));
    }
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line = indent;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) {
        line.append(width[i] - display_width(row[i]) + 2, ' ');
      }
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + "\n";
  }
  return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string join_ints(const std::vector<int>& xs, const std::string& sep) {
  std::vector<std::string> s;
  for (int x : xs) s.push_back(std::to_string(x));
  return join(s, sep);
}

std::string d0_zone_name(const ScoringOptions& o) {
  return o.reflexive_is_rational ? "rational" : "irrational";
}

std::string signed_int(int d) {
  return (d > 0 ? "+" : "") + std::to_string(d);
}

// ---------------------------------------------------------------------------
// Score report

void write_review(JsonWriter& w, const ReviewAssessment& ra,
                  const std::vector<TrustAssessment>* objects) {
  const Review& r = ra.review;
  w.begin_object()
      .field("reviewer_id", r.reviewer_id)
      .field("object", r.object)
      .field("rating", r.rating)
      .field("polarity", std::string(to_string(r.polarity)))
      .field("polarity_inferred", r.polarity_inferred)
      .field("comment", r.comment);
  const TrustAssessment* a =
      ra.assessment && objects ? &(*objects)[*ra.assessment] : nullptr;
  w.key("pattern");
  a ? w.str(a->pattern.to_string()) : w.null();
  w.key("degree");
  a && a->degree ? w.number(a->degree->exact) : w.null();
  w.key("zone");
  a && a->zone ? w.str(std::string(to_string(*a->zone))) : w.null();
  w.key("polarity_match");
  ra.verdict ? w.boolean(ra.verdict->polarity_match) : w.null();
  w.key("weak_match");
  ra.verdict ? w.boolean(ra.verdict->weak) : w.null();
  w.key("narrative");
  ra.verdict ? w.str(std::string(to_string(ra.verdict->narrative))) : w.null();
  w.key("error");
  ra.error ? w.str(*ra.error) : w.null();
  w.end_object();
}

void write_object(JsonWriter& w, const TrustAssessment& a) {
  w.begin_object().field("object", a.object).field("pattern",
                                                   a.pattern.to_string());
  w.key("slots").begin_array();
  for (const auto& s : a.pattern.slots) w.str(s.to_string());
  w.end_array();
  w.key("absent").begin_array();
  for (bool b : a.pattern.absent) w.boolean(b);
  w.end_array();
  w.field("rank_class", std::string(to_string(a.rank_class)));
  w.key("bar");
  a.bar ? w.str(a.bar_label) : w.null();
  w.key("difference");
  a.bar ? w.integer(a.bar->difference) : w.null();
  w.key("frequency");
  a.bar ? w.integer(a.frequency) : w.null();
  w.key("degree");
  a.degree ? w.number(a.degree->exact) : w.null();
  w.key("degree_exact");
  a.degree ? w.str(a.degree->exact.str()) : w.null();
  w.key("degenerate");
  a.degree ? w.boolean(a.degree->degenerate) : w.null();
  w.key("zone");
  a.zone ? w.str(std::string(to_string(*a.zone))) : w.null();
  w.key("annotations").begin_array();
  for (const auto& n : a.annotations) {
    w.begin_object().field("code", n.code).field("message", n.message);
    w.end_object();
  }
  w.end_array();
  w.end_object();
}

void write_overall(JsonWriter& w, const OverallRationality& o) {
  const int r = o.realized_r;
  w.begin_object()
      .field("n", o.n)
      .field("p", o.p)
      .field("realized_r", r);
  w.key("distribution").begin_array();
  for (const auto& f : o.distribution) w.number(f);
  w.end_array();
  w.field("f_r", o.f(r))
      .field("f_at_most_r", o.at_most(r))
      .field("f_less_than_r", o.less_than(r))
      .field("f_more_than_r", o.more_than(r))
      .field("f_at_least_r", o.at_least(r));
  w.end_object();
}

void write_input_error(JsonWriter& w, const RecordError& e) {
  w.begin_object()
      .field("source", e.source)
      .field("line", e.line)
      .field("kind", e.kind)
      .field("message", e.message);
  w.end_object();
}

std::string report_json(const TrustReport& report,
                        const std::vector<RecordError>& input_errors) {
  JsonWriter w;
  w.begin_object()
      .field("tool", std::string("trustpat"))
      .field("version", std::string(library_version()));
  w.key("options")
      .begin_object()
      .field("membership", std::string(to_string(report.options.membership)))
      .field("d0_zone", d0_zone_name(report.options))
      .field("p", report.options.p);
  w.end_object();
  w.key("reviewers").begin_array();
  for (const auto& rv : report.reviewers) {
    w.begin_object().field("reviewer_id", rv.reviewer_id);
    w.key("objects_per_period");
    write_ints(w, rv.objects_per_period);
    w.key("periods").begin_array();
    for (const auto& p : rv.periods) {
      w.begin_object().field("period", p.period);
      w.key("order");
      write_strings(w, p.order);
      w.field("pattern", p.pattern);
      w.key("runs");
      write_ints(w, p.runs);
      w.field("acyclic", p.acyclic);
      w.end_object();
    }
    w.end_array();
    w.key("joint_pattern");
    rv.joint_pattern ? w.str(*rv.joint_pattern) : w.null();
    w.field("revealed_preference", rv.has_revealed_preference);
    w.key("single_period_conformance");
    rv.single_period_conformance ? w.boolean(*rv.single_period_conformance)
                                 : w.null();
    w.key("objects").begin_array();
    for (const auto& a : rv.objects) write_object(w, a);
    w.end_array();
    w.key("reviews").begin_array();
    for (const auto& ra : rv.reviews) write_review(w, ra, &rv.objects);
    w.end_array();
    w.key("overall");
    rv.overall ? write_overall(w, *rv.overall) : void(w.null());
    w.key("errors");
    write_strings(w, rv.errors);
    w.end_object();
  }
  w.end_array();
  w.key("orphan_reviews").begin_array();
  for (const auto& ra : report.orphan_reviews) write_review(w, ra, nullptr);
  w.end_array();
  w.key("input_errors").begin_array();
  for (const auto& e : input_errors) write_input_error(w, e);
  w.end_array();
  w.end_object();
  return w.finish();
}

std::string opt_zone(const std::optional<Zone>& z) {
  return z ? std::string(to_string(*z)) : "-";
}

std::string opt_degree(const std::optional<MembershipDegree>& d) {
  return d ? format_fixed(d->exact) : "-";
}

std::vector<std::string> annotation_codes(const TrustAssessment& a) {
  std::vector<std::string> codes;
  for (const auto& n : a.annotations) codes.push_back(n.code);
  return codes;
}

std::string report_csv(const TrustReport& report,
                       const std::vector<RecordError>& input_errors) {
  std::string out = csv_row(
      {"reviewer_id", "object", "pattern", "rank_class", "bar", "difference",
       "frequency", "degree", "zone", "rating", "polarity", "polarity_match",
       "narrative", "annotations", "error"});
  auto review_cells = [](const ReviewAssessment& ra) {
    return std::vector<std::string>{
        std::to_string(ra.review.rating),
        std::string(to_string(ra.review.polarity)),
        ra.verdict ? (ra.verdict->polarity_match ? "true" : "false") : "",
        ra.verdict ? std::string(to_string(ra.verdict->narrative)) : ""};
  };
  for (const auto& rv : report.reviewers) {
    for (std::size_t i = 0; i < rv.objects.size(); ++i) {
      const auto& a = rv.objects[i];
      std::vector<std::string> base{
          rv.reviewer_id,
          a.object,
          a.pattern.to_string(),
          std::string(to_string(a.rank_class)),
          a.bar ? a.bar_label : "",
          a.bar ? std::to_string(a.bar->difference) : "",
          a.bar ? std::to_string(a.frequency) : "",
          a.degree ? format_fixed(a.degree->exact) : "",
          a.zone ? std::string(to_string(*a.zone)) : ""};
      bool any = false;
      for (const auto& ra : rv.reviews) {
        if (ra.assessment != i) continue;
        any = true;
        auto row = base;
        for (auto& c : review_cells(ra)) row.push_back(c);
        row.push_back(join(annotation_codes(a), ";"));
        row.push_back("");
        out += csv_row(row);
      }
      if (!any) {
        auto row = base;
        row.insert(row.end(), 4, "");
        row.push_back(join(annotation_codes(a), ";"));
        row.push_back("");
        out += csv_row(row);
      }
    }
    for (const auto& ra : rv.reviews) {
      if (ra.assessment) continue;
      std::vector<std::string> row{rv.reviewer_id, ra.review.object};
      row.insert(row.end(), 7, "");
      for (auto& c : review_cells(ra)) row.push_back(c);
      row.push_back("");
      row.push_back(ra.error.value_or(""));
      out += csv_row(row);
    }
    for (const auto& e : rv.errors) {
      std::vector<std::string> row{rv.reviewer_id};
      row.insert(row.end(), 13, "");
      row.push_back(e);
      out += csv_row(row);
    }
  }
  for (const auto& ra : report.orphan_reviews) {
    std::vector<std::string> row{ra.review.reviewer_id, ra.review.object};
    row.insert(row.end(), 12, "");
    row.push_back(ra.error.value_or("reviewer has no episodes"));
    out += csv_row(row);
  }
  for (const auto& e : input_errors) {
    std::vector<std::string> row(14, "");
    row.push_back(e.message);
    out += csv_row(row);
  }
  return out;
}

std::string report_text(const TrustReport& report,
                        const std::vector<RecordError>& input_errors) {
  std::ostringstream out;
  out << "trustpat " << library_version() << "  membership="
      << to_string(report.options.membership)
      << "  d0-zone=" << d0_zone_name(report.options)
      << "  p=" << format_fixed(report.options.p) << "\n";
  for (const auto& rv : report.reviewers) {
    out << "\nreviewer " << rv.reviewer_id << "  objects per period: "
        << join_ints(rv.objects_per_period, ", ") << "\n";
    for (const auto& p : rv.periods) {
      out << "  period " << p.period << "  pattern " << p.pattern
          << "  runs [" << join_ints(p.runs, ",") << "]"
          << (p.acyclic ? "" : "  (cyclic)") << "\n";
    }
    if (rv.joint_pattern) out << "  joint pattern " << *rv.joint_pattern << "\n";
    if (rv.single_period_conformance) {
      out << "  single-period conformance: "
          << (*rv.single_period_conformance ? "yes" : "no") << "\n";
    }
    std::vector<std::vector<std::string>> rows{
        {"object", "pattern", "class", "bar", "d", "freq", "degree", "zone",
         "notes"}};
    for (const auto& a : rv.objects) {
      rows.push_back({a.object, a.pattern.to_string(),
                      std::string(to_string(a.rank_class)),
                      a.bar ? a.bar_label : "-",
                      a.bar ? signed_int(a.bar->difference) : "-",
                      a.bar ? std::to_string(a.frequency) : "-",
                      opt_degree(a.degree), opt_zone(a.zone),
                      join(annotation_codes(a), ",")});
    }
    out << "\n" << text_table(rows, "  ");
    for (const auto& a : rv.objects) {
      for (const auto& n : a.annotations) {
        out << "  note " << a.object << ": " << n.message << "\n";
      }
    }
    if (!rv.reviews.empty()) {
      std::vector<std::vector<std::string>> rrows{
          {"review", "rating", "polarity", "match", "narrative", "degree"}};
      for (const auto& ra : rv.reviews) {
        const TrustAssessment* a =
            ra.assessment ? &rv.objects[*ra.assessment] : nullptr;
        std::string match = "-";
        if (ra.verdict) {
          match = ra.verdict->polarity_match
                      ? (ra.verdict->weak ? "weak" : "yes")
                      : "no";
        }
        rrows.push_back(
            {ra.review.object, std::to_string(ra.review.rating),
             std::string(to_string(ra.review.polarity)) +
                 (ra.review.polarity_inferred ? "*" : ""),
             match,
             ra.verdict ? std::string(to_string(ra.verdict->narrative))
                        : (ra.error ? "error: " + *ra.error : "-"),
             a ? opt_degree(a->degree) : "-"});
      }
      out << "\n" << text_table(rrows, "  ");
    }
    if (rv.overall) {
      const auto& o = *rv.overall;
      const int r = o.realized_r;
      out << "\n  overall: n=" << o.n << " r=" << r
          << "  f(r)=" << format_fixed(o.f(r))
          << "  f(<=r)=" << format_fixed(o.at_most(r))
          << "  f(<r)=" << format_fixed(o.less_than(r))
          << "  f(>r)=" << format_fixed(o.more_than(r))
          << "  f(>=r)=" << format_fixed(o.at_least(r)) << "\n";
    }
    for (const auto& e : rv.errors) out << "  error: " << e << "\n";
  }
  for (const auto& ra : report.orphan_reviews) {
    out << "\norphan review " << ra.review.reviewer_id << "/"
        << ra.review.object << ": "
        << ra.error.value_or("reviewer has no episodes") << "\n";
  }
  for (const auto& e : input_errors) {
    out << "input error (" << e.source << "): " << e.message << "\n";
  }
  return out.str();
}

}  // namespace

std::string render_report(const TrustReport& report,
                          const std::vector<RecordError>& input_errors,
                          Format format) {
  switch (format) {
    case Format::kJson:
      return report_json(report, input_errors);
    case Format::kCsv:
      return report_csv(report, input_errors);
    case Format::kText:
      return report_text(report, input_errors);
  }
  return {};
}

// ---------------------------------------------------------------------------
// τ listing

std::string render_tau(const std::vector<int>& objects_per_period,
                       MembershipVariant variant, Format format) {
  const auto tau = build_tau(objects_per_period);
  std::optional<BinTable> table;
  if (objects_per_period.size() == 2) {
    table.emplace(objects_per_period[0], objects_per_period[1]);
  }
  struct Row {
    std::string pattern, rank_class, bar, difference, frequency, membership;
    std::optional<MembershipDegree> degree;
  };
  std::vector<Row> rows;
  for (const auto& p : tau) {
    Row row{p.to_string(), std::string(to_string(p.rank_class)), "-", "-",
            "-", "-", std::nullopt};
    if (table && p.bar) {
      row.bar = table->label(*p.bar);
      row.difference = signed_int(p.bar->difference);
      row.frequency = std::to_string(table->frequency(*p.bar));
      row.degree = membership(*p.bar, *table, variant);
      row.membership = format_fixed(row.degree->exact);
    }
    rows.push_back(std::move(row));
  }

  if (format == Format::kJson) {
    JsonWriter w;
    w.begin_object();
    w.key("objects_per_period");
    write_ints(w, objects_per_period);
    w.field("membership", std::string(to_string(variant)))
        .field("count", static_cast<std::int64_t>(rows.size()));
    w.key("rows").begin_array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      w.begin_object()
          .field("pattern", r.pattern)
          .field("rank_class", r.rank_class);
      w.key("bar");
      tau[i].bar ? w.str(r.bar) : w.null();
      w.key("difference");
      tau[i].bar ? w.integer(tau[i].bar->difference) : w.null();
      w.key("frequency");
      table ? w.integer(table->frequency(*tau[i].bar)) : w.null();
      w.key("membership");
      r.degree ? w.number(r.degree->exact) : w.null();
      w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.finish();
  }
  std::vector<std::vector<std::string>> cells{
      {"pattern", "rank_class", "bar", "difference", "frequency",
       "membership"}};
  for (const auto& r : rows) {
    cells.push_back({r.pattern, r.rank_class, r.bar, r.difference, r.frequency,
                     r.membership});
  }
  if (format == Format::kCsv) {
    std::string out;
    for (auto& c : cells) {
      for (auto& s : c) {
        if (s == "-") s.clear();
      }
      out += csv_row(c);
    }
    return out;
  }
  return text_table(cells) + std::to_string(rows.size()) + " patterns\n";
}

// ---------------------------------------------------------------------------
// Information index

std::string render_info_index(const IfsList& list, Format format) {
  for (const auto& e : list) validate(e);
  const IfsElement& chosen = choose_from_list(list);
  const auto argmax = choice_correspondence(list);
  std::vector<std::string> tied;
  for (const auto& e : argmax) tied.push_back(e.id);

  if (format == Format::kJson) {
    JsonWriter w;
    w.begin_object();
    w.key("elements").begin_array();
    for (const auto& e : list) {
      w.begin_object().field("id", e.id);
      w.key("mu").number(e.mu);
      w.key("nu").number(e.nu);
      w.key("pi").number(e.pi());
      w.key("entropy").number(entropy(e));
      w.end_object();
    }
    w.end_array();
    w.field("chosen", chosen.id);
    w.key("choice_correspondence");
    write_strings(w, tied);
    w.end_object();
    return w.finish();
  }
  std::vector<std::vector<std::string>> cells{{"id", "mu", "nu", "pi", "H"}};
  for (const auto& e : list) {
    cells.push_back({e.id, format_fixed(e.mu), format_fixed(e.nu),
                     format_fixed(e.pi()), format_fixed(entropy(e))});
  }
  if (format == Format::kCsv) {
    cells[0].push_back("chosen");
    std::string out = csv_row(cells[0]);
    for (std::size_t i = 1; i < cells.size(); ++i) {
      cells[i].push_back(&list[i - 1] == &chosen ? "true" : "false");
      out += csv_row(cells[i]);
    }
    return out;
  }
  return text_table(cells) + "chosen: " + chosen.id + "\n" +
         "choice correspondence: " + join(tied, ", ") + "\n";
}

// ---------------------------------------------------------------------------
// Consistency check

namespace {

std::string set_text(const ChoiceObservations& obs, Subset s) {
  return "{" + join(obs.ids_of(s), ",") + "}";
}

}  // namespace

std::string render_check(const ChoiceObservations& obs, Format format) {
  const auto result = check_contraction(obs);
  const auto order = rationalizable(obs);
  const bool complete = obs.missing().empty();
  const auto& g = obs.ground_set();

  if (format == Format::kJson) {
    JsonWriter w;
    w.begin_object();
    w.key("ground_set");
    write_strings(w, g);
    w.field("complete", complete)
        .field("recorded",
               static_cast<std::int64_t>(obs.recorded().size()))
        .field("contraction_consistent", result.consistent);
    w.key("violations").begin_array();
    for (const auto& v : result.violations) {
      w.begin_object();
      w.key("smaller");
      write_strings(w, obs.ids_of(v.smaller));
      w.key("larger");
      write_strings(w, obs.ids_of(v.larger));
      w.field("chosen_smaller", g[obs.choice(v.smaller)])
          .field("chosen_larger", g[obs.choice(v.larger)]);
      w.end_object();
    }
    w.end_array();
    w.key("rationalizing_order");
    order ? write_strings(w, *order) : void(w.null());
    w.end_object();
    return w.finish();
  }
  if (format == Format::kCsv) {
    std::string out = csv_row({"smaller", "larger", "chosen_smaller",
                               "chosen_larger"});
    for (const auto& v : result.violations) {
      out += csv_row({join(obs.ids_of(v.smaller), " "),
                      join(obs.ids_of(v.larger), " "), g[obs.choice(v.smaller)],
                      g[obs.choice(v.larger)]});
    }
    return out;
  }
  std::ostringstream out;
  out << "ground set: " << join(g, " ") << "\n";
  if (!complete) {
    out << "partial table: " << obs.recorded().size() << " of "
        << ((std::size_t{1} << g.size()) - 1) << " subsets recorded\n";
  }
  out << "contraction: "
      << (result.consistent ? (complete ? "consistent" : "consistent so far")
                            : "violated")
      << "\n";
  for (const auto& v : result.violations) {
    out << "  violation: " << set_text(obs, v.smaller) << " within "
        << set_text(obs, v.larger) << ": C" << set_text(obs, v.smaller) << "="
        << g[obs.choice(v.smaller)] << ", C" << set_text(obs, v.larger) << "="
        << g[obs.choice(v.larger)] << "\n";
  }
  out << "rationalizing order: " << (order ? join(*order, " > ") : "none")
      << "\n";
  return out.str();
}

}  // namespace trustpat

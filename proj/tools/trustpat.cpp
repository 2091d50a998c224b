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

// trustpat: score reviewer trust from choice histories.
//
// Exit codes: 0 success, 1 report written but some records failed,
// 2 usage or fatal input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trustpat/io.hpp"

namespace {

constexpr int kExitPartial = 1;
constexpr int kExitFatal = 2;

struct CommonFlags {
  std::string membership = "minmax";
  std::string d0_zone = "rational";
  std::string p = "1/2";
  std::string out;
  std::optional<std::string> format;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--membership", f.membership, "Bar degree normalization")
      ->check(CLI::IsMember({"minmax", "smoothed"}))
      ->capture_default_str();
  cmd->add_option("--d0-zone", f.d0_zone,
                  "Zone counted for the zero-difference bar")
      ->check(CLI::IsMember({"rational", "irrational"}))
      ->capture_default_str();
  cmd->add_option("--p", f.p, "Per-object rationality probability")
      ->capture_default_str();
  cmd->add_option("--out", f.out, "Write output here instead of stdout");
  cmd->add_option("--format", f.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
}

trustpat::ScoringOptions scoring_options(const CommonFlags& f) {
  trustpat::ScoringOptions o;
  o.membership = trustpat::parse_membership_variant(f.membership);
  o.reflexive_is_rational = f.d0_zone == "rational";
  o.p = trustpat::parse_rational(f.p);
  if (o.p < 0 || o.p > 1) throw trustpat::DomainError("--p must lie in [0, 1]");
  return o;
}

trustpat::Format format_of(const CommonFlags& f, trustpat::Format fallback) {
  return f.format ? trustpat::parse_format(*f.format) : fallback;
}

void emit(const CommonFlags& f, const std::string& body) {
  if (f.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(f.out, std::ios::binary);
  if (!out) throw trustpat::Error("IoError", "cannot write '" + f.out + "'");
  out << body;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw trustpat::Error("IoError", "cannot read '" + path + "'");
  return in;
}

int cmd_score(const CommonFlags& f, const std::string& episodes_path,
              const std::string& reviews_path) {
  const auto options = scoring_options(f);
  auto ein = open_input(episodes_path);
  auto episodes = trustpat::read_episodes(ein);
  if (episodes.records == 0) {
    throw trustpat::Error("EmptyInput",
                          "episode file '" + episodes_path + "' has no records");
  }
  trustpat::ReviewBatch reviews;
  if (!reviews_path.empty()) {
    auto rin = open_input(reviews_path);
    reviews = trustpat::read_reviews(rin);
  }
  std::vector<trustpat::RecordError> input_errors = episodes.errors;
  input_errors.insert(input_errors.end(), reviews.errors.begin(),
                      reviews.errors.end());

  const auto report =
      trustpat::build_report(episodes.episodes, reviews.reviews, options);
  emit(f, trustpat::render_report(report, input_errors,
                                  format_of(f, trustpat::Format::kJson)));
  for (const auto& e : input_errors) std::cerr << "trustpat: " << e.message << "\n";
  return input_errors.empty() && !report.has_errors() ? 0 : kExitPartial;
}

int cmd_tau(const CommonFlags& f, int n, int t) {
  if (t < 1) throw trustpat::DomainError("--t must be at least 1");
  const std::vector<int> sizes(static_cast<std::size_t>(t), n);
  emit(f, trustpat::render_tau(
              sizes, trustpat::parse_membership_variant(f.membership),
              format_of(f, trustpat::Format::kText)));
  return 0;
}

int cmd_info_index(const CommonFlags& f, const std::string& path) {
  auto in = open_input(path);
  const auto list = trustpat::read_ifs_list(in);
  emit(f, trustpat::render_info_index(list,
                                      format_of(f, trustpat::Format::kText)));
  return 0;
}

int cmd_check(const CommonFlags& f, const std::string& path, bool partial) {
  auto in = open_input(path);
  auto obs = trustpat::read_choice_observations(in);
  // Construction throws IncompleteTable listing every missing subset.
  if (!partial) trustpat::ChoiceFunctionTable table(obs);
  emit(f, trustpat::render_check(obs, format_of(f, trustpat::Format::kText)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reviewer rationality patterns and trust degrees"};
  app.set_version_flag("--version", std::string(trustpat::library_version()));
  app.require_subcommand(1);

  CommonFlags flags;
  std::string episodes_path, reviews_path, list_path, table_path;
  int n = 4, t = 2;
  bool partial = false;

  auto* score = app.add_subcommand("score", "Score reviews against choice histories");
  score->add_option("episodes", episodes_path, "Episode records (JSON Lines)")
      ->required();
  score->add_option("reviews", reviews_path, "Review document (JSON)");
  add_common(score, flags);

  auto* tau = app.add_subcommand("tau", "List rationality outcomes and bar degrees");
  tau->add_option("--n", n, "Objects per period")->capture_default_str();
  tau->add_option("--t", t, "Number of periods")->capture_default_str();
  add_common(tau, flags);

  auto* info = app.add_subcommand("info-index", "Choose from a graded list");
  info->add_option("list", list_path, "IFS list (JSON)")->required();
  add_common(info, flags);

  auto* check = app.add_subcommand("check", "Consistency of a choice table");
  check->add_option("table", table_path, "Choice table (JSON)")->required();
  check->add_flag("--partial", partial,
                  "Accept a table that leaves some subsets unrecorded");
  add_common(check, flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*score) return cmd_score(flags, episodes_path, reviews_path);
    if (*tau) return cmd_tau(flags, n, t);
    if (*info) return cmd_info_index(flags, list_path);
    if (*check) return cmd_check(flags, table_path, partial);
  } catch (const trustpat::Error& e) {
    std::cerr << "trustpat: " << e.kind() << ": " << e.what() << "\n";
    return kExitFatal;
  } catch (const std::exception& e) {
    std::cerr << "trustpat: " << e.what() << "\n";
    return kExitFatal;
  }
  return kExitFatal;
}

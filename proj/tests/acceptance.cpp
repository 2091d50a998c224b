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

// Acceptance runner: one PASS/FAIL line per criterion.
//
//   acceptance [--cli PATH] [--data DIR]
//
// With --cli, the determinism check runs the command-line tool twice and
// compares its output files byte for byte.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "trustpat/consistency.hpp"
#include "trustpat/info_index.hpp"
#include "trustpat/io.hpp"
#include "trustpat/pattern_runs.hpp"
#include "trustpat/preference_graph.hpp"
#include "trustpat/rationality_outcomes.hpp"
#include "trustpat/trust_scoring.hpp"

using namespace trustpat;
namespace tt = trustpat::testing;

namespace {

struct Options {
  std::string cli;
  std::string data = TRUSTPAT_TEST_DATA;
};

Options g_options;

// Collects the first failed expectation of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }

 private:
  std::string failure_;
};

std::vector<std::uint8_t> bits_of(std::string_view s) {
  std::vector<std::uint8_t> out;
  for (char c : s) {
    if (c == '0' || c == '1') out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

const std::vector<ObjectId> kMNVZ{"M", "N", "V", "Z"};

std::vector<PreferenceMatrix> canonical_matrices() {
  std::vector<PreferenceMatrix> out;
  for (const auto& e : tt::canonical_episodes()) out.push_back(derive_matrix(e));
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// ---------------------------------------------------------------------------

void ac_matrices(Check& c) {
  const auto ms = canonical_matrices();
  c.expect(ms[0] == PreferenceMatrix(kMNVZ, bits_of("0111 0011 0001 0000")),
           "first-round matrix");
  c.expect(ms[1] == PreferenceMatrix(kMNVZ, bits_of("0000 1000 1100 1110")),
           "second-round matrix");
  c.expect(outdegrees(ms[0]) == std::vector<int>{3, 2, 1, 0},
           "first-round outdegrees");
  c.expect(outdegrees(ms[1]) == std::vector<int>{0, 1, 2, 3},
           "second-round outdegrees");
}

void ac_joint_pattern(Check& c) {
  const auto ms = canonical_matrices();
  const auto joint = concat_patterns(ms);
  c.expect(joint.to_string() == "01110011000100000000100011001110",
           "joint pattern bits");
  const auto runs = scan_runs(joint);
  c.expect(runs == std::vector<int>{3, 2, 1, 0, 0, 1, 2, 3}, "scanned runs");
  std::vector<int> oracle;
  for (const auto& m : ms) {
    for (int d : outdegrees(m)) oracle.push_back(d);
  }
  c.expect(runs == oracle, "runs differ from per-round outdegrees");
}

void ac_run_patterns(Check& c) {
  const auto eps = tt::canonical_episodes();
  const std::map<std::string, std::string> expected{
      {"M", "{3,ε}"}, {"N", "{2,1}"}, {"V", "{1,2}"}, {"Z", "{ε,3}"}};
  for (const auto& [id, text] : expected) {
    const auto got = omega(eps, id).to_string();
    c.expect(got == text, id + " gave " + got);
  }
}

void ac_tau(Check& c) {
  const std::vector<int> ns{4, 4};
  const auto tau = build_tau(ns);
  const auto count = count_tau_two_periods(4);
  c.expect(tau.size() == 16, "tau size " + std::to_string(tau.size()));
  c.expect(count.total() == 16, "count total");
  c.expect(count.decreasing == 6, "decreasing count");
  c.expect(count.nondecreasing == 10, "nondecreasing count");
  std::int64_t down = 0;
  for (const auto& p : tau) down += p.slots[0] > p.slots[1];
  c.expect(down == 6, "enumerated decreasing patterns");
}

void ac_bins(Check& c) {
  const auto table = bin_frequencies(4);
  const std::map<std::string, std::int64_t> expected{
      {"A", 3}, {"B", 2}, {"C", 1}, {"D", 4}, {"E", 3}, {"F", 2}, {"G", 1}};
  for (const auto& [label, f] : expected) {
    const auto bar = table.find(label);
    c.expect(bar && table.frequency(*bar) == f, "frequency of " + label);
  }
  for (int d = table.min_difference(); d <= table.max_difference(); ++d) {
    c.expect(table.frequency(Bar{d}) == table.frequency(Bar{-d}),
             "asymmetric at d=" + std::to_string(d));
  }
}

void ac_membership(Check& c) {
  const auto table = bin_frequencies(4);
  const std::map<std::string, Rational> expected{
      {"D", Rational(1)},    {"A", Rational(2, 3)}, {"E", Rational(2, 3)},
      {"B", Rational(1, 3)}, {"F", Rational(1, 3)}, {"C", Rational(0)},
      {"G", Rational(0)}};
  for (const auto& [label, mu] : expected) {
    const auto got = membership(*table.find(label), table);
    c.expect(std::abs(got.value() - to_double(mu)) <= 1e-9,
             "membership of " + label);
    c.expect(!got.degenerate, "degenerate flag on " + label);
  }
}

void ac_zones(Check& c) {
  const auto report = build_report(tt::canonical_episodes(), {});
  const auto& objects = report.reviewers.at(0).objects;
  const std::map<std::string, Zone> expected{{"M", Zone::kIrrational},
                                             {"N", Zone::kIrrational},
                                             {"V", Zone::kRational},
                                             {"Z", Zone::kRational}};
  for (const auto& a : objects) {
    c.expect(a.zone == expected.at(a.object), "zone of " + a.object);
  }
  c.expect(objects.size() == 4, "object count");
}

void ac_binomial(Check& c) {
  const auto o = OverallRationality::make(4, Rational(1, 2), 1);
  c.expect(o.f(1) == Rational(1, 4), "f(1)");
  c.expect(o.at_most(1) == Rational(5, 16), "f(r<=1)");
  c.expect(o.more_than(1) == Rational(11, 16), "f(r>1)");
  c.expect(o.less_than(1) == Rational(1, 16), "f(r<1)");
  c.expect(o.at_least(1) == Rational(15, 16), "f(r>=1)");
  c.expect(format_fixed(o.at_most(1)) == "0.31250000", "8-decimal rendering");
}

void ac_trust_report(Check& c) {
  std::ifstream ein(g_options.data + "/canonical_episodes.jsonl");
  std::ifstream rin(g_options.data + "/canonical_reviews.json");
  const auto episodes = read_episodes(ein);
  const auto reviews = read_reviews(rin);
  c.expect(episodes.errors.empty() && reviews.errors.empty(), "fixture parse");
  const auto report = build_report(episodes.episodes, reviews.reviews);
  const auto& r = report.reviewers.at(0);
  for (const auto& ra : r.reviews) {
    const auto& id = ra.review.object;
    c.expect(ra.assessment.has_value() && ra.verdict.has_value(),
             "no verdict for " + id);
    if (!ra.assessment || !ra.verdict) continue;
    const auto& a = r.objects[*ra.assessment];
    c.expect(ra.verdict->polarity_match, "polarity mismatch on " + id);
    const std::string shown = format_fixed(a.degree->exact, 2);
    if (id == "N" || id == "V") {
      c.expect(shown == "0.67", id + " degree " + shown);
      c.expect(a.annotations.empty(), id + " annotated");
    } else {
      c.expect(a.degree->exact == 0, id + " degree " + shown);
      const bool noted =
          a.annotations.size() == 1 &&
          a.annotations[0].code == "reference-degree-mismatch" &&
          a.annotations[0].message.find("0.33") != std::string::npos;
      c.expect(noted, id + " lacks the reference-degree annotation");
    }
  }
  c.expect(r.reviews.size() == 4, "review count");
}

void ac_entropy(Check& c) {
  c.expect(entropy({"", 0.5, 0.5}) == 1.0, "H(1/2,1/2) != 1");
  c.expect(entropy({"", 1.0, 0.0}) == 0.0, "H(1,0) != 0");
  double worst = 0.0;
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; i + j <= 20; ++j) {
      worst = std::max(worst, std::abs(entropy({"", i * 0.05, j * 0.05}) -
                                       entropy({"", j * 0.05, i * 0.05})));
    }
  }
  c.expect(worst < 1e-12, "asymmetry " + std::to_string(worst));
}

void ac_partition(Check& c) {
  std::mt19937_64 rng(20261018);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 10000; ++trial) {
    const int len = 1 + static_cast<int>(rng() % 8);
    IfsList l;
    for (int i = 0; i < len; ++i) {
      double mu, nu;
      if (rng() % 2) {
        mu = static_cast<double>(rng() % 5) / 4.0;
        nu = static_cast<double>(rng() % (5 - static_cast<int>(mu * 4))) / 4.0;
      } else {
        mu = u(rng);
        nu = u(rng) * (1.0 - mu);
      }
      l.push_back({std::to_string(i), mu, nu});
    }
    if (&fold_pairwise(l) != &choose_from_list(l)) {
      c.expect(false, "fold differs from global choice");
      return;
    }
  }
  IfsList grid;
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; m + n <= 4; ++n) grid.push_back({"", m / 4.0, n / 4.0});
  }
  for (int len = 2; len <= 5; ++len) {
    std::vector<std::size_t> digits(static_cast<std::size_t>(len), 0);
    IfsList l(static_cast<std::size_t>(len));
    while (true) {
      for (int i = 0; i < len; ++i) {
        l[i] = grid[digits[i]];
        l[i].id = std::to_string(i);
      }
      const std::string whole = fold_pairwise(l).id;
      std::span<const IfsElement> all(l);
      for (int cut = 1; cut < len; ++cut) {
        IfsList pair{fold_pairwise(all.first(cut)),
                     fold_pairwise(all.subspan(cut))};
        if (fold_pairwise(pair).id != whole) {
          c.expect(false, "partition identity fails at length " +
                              std::to_string(len));
          return;
        }
      }
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == grid.size()) digits[k++] = 0;
      if (k == digits.size()) break;
    }
  }
}

void ac_consistency(Check& c) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<ObjectId> perm;
    for (std::size_t i = 0; i < n; ++i) perm.push_back(std::string(1, 'a' + i));
    do {
      const auto t = ChoiceFunctionTable::from_order(perm);
      if (!check_contraction(t).consistent) {
        c.expect(false, "order table fails contraction");
        return;
      }
      const auto found = rationalizable(t);
      if (!found) {
        c.expect(false, "order table not rationalized");
        return;
      }
      const auto again = ChoiceFunctionTable::from_order(*found);
      for (Subset s = 1; s < (Subset{1} << n); ++s) {
        if (again.choice(s) != t.choice(s)) {
          c.expect(false, "recovered order has different maximizers");
          return;
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  ChoiceObservations bad({"a", "b", "c"});
  bad.record({"a"}, "a");
  bad.record({"b"}, "b");
  bad.record({"c"}, "c");
  bad.record({"a", "b"}, "a");
  bad.record({"a", "c"}, "a");
  bad.record({"b", "c"}, "b");
  bad.record({"a", "b", "c"}, "b");
  const auto result = check_contraction(ChoiceFunctionTable(bad));
  c.expect(!result.consistent && result.violations.size() == 1,
           "violating table not detected");
  if (!result.violations.empty()) {
    c.expect(bad.ids_of(result.violations[0].smaller) ==
                     std::vector<ObjectId>{"a", "b"} &&
                 bad.ids_of(result.violations[0].larger) ==
                     std::vector<ObjectId>{"a", "b", "c"},
             "wrong violating pair");
  }
  c.expect(classify_lemma2(RunCount(1), RunCount(2)) == Lemma2Class::kStrong,
           "(1,2) not Strong");
  c.expect(classify_lemma2(RunCount(2), RunCount(1)) == Lemma2Class::kWeak,
           "(2,1) not Weak");
}

void ac_determinism(Check& c) {
  auto library_run = [] {
    std::ifstream ein(g_options.data + "/canonical_episodes.jsonl");
    std::ifstream rin(g_options.data + "/canonical_reviews.json");
    const auto episodes = read_episodes(ein);
    const auto reviews = read_reviews(rin);
    return render_report(build_report(episodes.episodes, reviews.reviews), {},
                         Format::kJson);
  };
  const auto first = library_run();
  c.expect(!first.empty() && first == library_run(),
           "library reports differ");
  if (g_options.cli.empty()) return;
  std::vector<std::string> outputs;
  for (int run = 0; run < 2; ++run) {
    const std::string out = "acceptance_score_" + std::to_string(run) + ".json";
    const std::string cmd = "\"" + g_options.cli + "\" score \"" +
                            g_options.data + "/canonical_episodes.jsonl\" \"" +
                            g_options.data + "/canonical_reviews.json\" --out " +
                            out;
    c.expect(std::system(cmd.c_str()) == 0, "cli exit status");
    outputs.push_back(slurp(out));
    std::remove(out.c_str());
  }
  c.expect(!outputs[0].empty() && outputs[0] == outputs[1],
           "cli reports differ");
  c.expect(outputs[0] == first, "cli and library reports differ");
}

struct Criterion {
  const char* id;
  const char* title;
  std::function<void(Check&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--cli") g_options.cli = argv[i + 1];
    if (flag == "--data") g_options.data = argv[i + 1];
  }
  const std::vector<Criterion> criteria{
      {"AC01", "canonical preference matrices and outdegrees", ac_matrices},
      {"AC02", "joint pattern and scanned runs", ac_joint_pattern},
      {"AC03", "run patterns of M, N, V, Z", ac_run_patterns},
      {"AC04", "outcome set size and decomposition", ac_tau},
      {"AC05", "bar frequencies and symmetry", ac_bins},
      {"AC06", "membership degrees within 1e-9", ac_membership},
      {"AC07", "zones on the canonical input", ac_zones},
      {"AC08", "binomial scores at p=1/2, n=4", ac_binomial},
      {"AC09", "trust report degrees, matches and annotations",
       ac_trust_report},
      {"AC10", "entropy values and symmetry", ac_entropy},
      {"AC11", "pairwise fold and partition identity", ac_partition},
      {"AC12", "contraction, rationalizability and adjacent-run classes",
       ac_consistency},
      {"AC13", "byte-identical score reports", ac_determinism},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (check.ok() ? "PASS " : "FAIL ") << cr.id << "  " << cr.title;
    if (!check.ok()) std::cout << "  (" << check.failure() << ")";
    std::cout << "\n";
    failed += !check.ok();
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/"
            << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}

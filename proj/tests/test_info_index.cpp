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

#include <cmath>
#include <random>

#include "doctest.h"
#include "trustpat/info_index.hpp"

using namespace trustpat;

namespace {

// Natural-log form, converted; independent of the library's log2 path.
double entropy_oracle(double mu, double nu) {
  double h = 0.0;
  for (double p : {mu, nu}) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return h / std::log(2.0);
}

// Grades on a quarter grid with mu + nu <= 1.
std::vector<IfsElement> grid_elements() {
  std::vector<IfsElement> out;
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; m + n <= 4; ++n) {
      out.push_back({"", m / 4.0, n / 4.0});
    }
  }
  return out;
}

IfsList random_list(std::mt19937_64& rng, int len) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> q(0, 10);
  IfsList out;
  for (int i = 0; i < len; ++i) {
    double mu, nu;
    if (rng() % 2) {
      // Coarse grades produce many exact ties.
      mu = q(rng) / 10.0;
      nu = std::uniform_int_distribution<int>(0, 10 - static_cast<int>(
                                                      std::lround(mu * 10)))(rng) /
           10.0;
    } else {
      mu = u(rng);
      nu = u(rng) * (1.0 - mu);
    }
    out.push_back({"e" + std::to_string(i), mu, nu});
  }
  return out;
}

}  // namespace

TEST_CASE("entropy reference values") {
  CHECK(entropy({"a", 0.5, 0.5}) == 1.0);
  CHECK(entropy({"a", 1.0, 0.0}) == 0.0);
  CHECK(entropy({"a", 0.0, 0.0}) == 0.0);
  CHECK(entropy({"a", 0.25, 0.25}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_FALSE(std::signbit(entropy({"a", 0.0, 1.0})));
}

TEST_CASE("entropy matches the natural-log oracle") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const double mu = u(rng);
    const double nu = u(rng) * (1.0 - mu);
    CHECK(std::abs(entropy({"x", mu, nu}) - entropy_oracle(mu, nu)) < 1e-12);
  }
}

TEST_CASE("entropy is symmetric on a 0.05 grid") {
  double worst = 0.0;
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; i + j <= 20; ++j) {
      const double mu = i * 0.05;
      const double nu = j * 0.05;
      worst = std::max(worst, std::abs(entropy({"", mu, nu}) -
                                       entropy({"", nu, mu})));
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("entropy on the complementary slice peaks at one half") {
  for (int i = 0; i <= 1000; ++i) {
    const double mu = i / 1000.0;
    const double h = entropy({"", mu, 1.0 - mu});
    if (i == 500) {
      CHECK(h == 1.0);
    } else {
      CHECK(h < 1.0);
    }
  }
}

TEST_CASE("entropy exceeds one below the complementary slice") {
  // With indeterminacy left over, two equal grades of 0.3 carry more than
  // one bit under the two-term form.
  CHECK(entropy({"", 0.3, 0.3}) > 1.0);
  CHECK(entropy({"", 0.3, 0.3}) == doctest::Approx(entropy_oracle(0.3, 0.3)));
}

TEST_CASE("grade validation names the element") {
  CHECK_NOTHROW(validate({"ok", 0.7, 0.3}));
  try {
    validate({"bad", 0.7, 0.5});
    FAIL("expected GradeError");
  } catch (const GradeError& e) {
    CHECK(e.element() == "bad");
  }
  CHECK_THROWS_AS(validate({"neg", -0.1, 0.5}), GradeError);
  CHECK_THROWS_AS(validate({"big", 1.1, 0.0}), GradeError);
}

TEST_CASE("choice from lists") {
  IfsList l1{{"a", 0.5, 0.5}, {"b", 0.9, 0.1}};
  CHECK(choose_from_list(l1).id == "a");

  IfsList l2{{"a", 0.7, 0.1}, {"b", 0.4, 0.4}, {"c", 0.2, 0.1}};
  std::size_t best = 0;
  for (std::size_t i = 1; i < l2.size(); ++i) {
    if (entropy_oracle(l2[i].mu, l2[i].nu) >
        entropy_oracle(l2[best].mu, l2[best].nu)) {
      best = i;
    }
  }
  CHECK(l2[best].id == "b");
  CHECK(choose_from_list(l2).id == "b");

  IfsList l3{{"a", 0.5, 0.5}, {"b", 0.5, 0.5}};
  CHECK(choose_from_list(l3).id == "a");

  IfsList one{{"solo", 0.2, 0.3}};
  CHECK(choose_from_list(one).id == "solo");
  CHECK(fold_pairwise(one).id == "solo");
  CHECK_THROWS_AS(choose_from_list(IfsList{}), EmptyList);
  CHECK_THROWS_AS(fold_pairwise(IfsList{}), EmptyList);
}

TEST_CASE("ties break on smaller indeterminacy") {
  // Both carry exactly one bit; b leaves no indeterminacy.
  IfsList l{{"a", 0.25, 0.25}, {"b", 0.5, 0.5}};
  REQUIRE(entropy(l[0]) == entropy(l[1]));
  CHECK(choose_from_list(l).id == "b");
  CHECK(fold_pairwise(l).id == "b");
}

TEST_CASE("pairwise fold keeps the earlier of two equal elements") {
  IfsList l{{"a", 0.5, 0.5}, {"b", 0.9, 0.1}, {"c", 0.5, 0.5}};
  CHECK(fold_pairwise(l).id == "a");
}

TEST_CASE("choice correspondence lists every maximizer") {
  IfsList l{{"a", 0.5, 0.5}, {"b", 0.9, 0.1}, {"c", 0.5, 0.5}};
  const auto all = choice_correspondence(l);
  REQUIRE(all.size() == 2);
  CHECK(all[0].id == "a");
  CHECK(all[1].id == "c");
}

TEST_CASE("fold equals global choice on random lists") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto l = random_list(rng, 1 + static_cast<int>(rng() % 8));
    REQUIRE(&fold_pairwise(l) == &choose_from_list(l));
  }
}

TEST_CASE("partition identity holds exhaustively on a quarter grid") {
  const auto grid = grid_elements();
  const std::size_t g = grid.size();
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  for (int len = 2; len <= 5; ++len) {
    std::vector<std::size_t> digits(static_cast<std::size_t>(len), 0);
    IfsList l(static_cast<std::size_t>(len));
    while (true) {
      for (int i = 0; i < len; ++i) {
        l[i] = grid[digits[i]];
        l[i].id = std::to_string(i);
      }
      const auto& whole = fold_pairwise(l);
      for (int cut = 1; cut < len; ++cut) {
        std::span<const IfsElement> all(l);
        IfsList pair{fold_pairwise(all.first(cut)),
                     fold_pairwise(all.subspan(cut))};
        mismatches += fold_pairwise(pair).id != whole.id;
        ++checked;
      }
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == g) digits[k++] = 0;
      if (k == digits.size()) break;
    }
  }
  CHECK(mismatches == 0);
  CHECK(checked > 1000000);
}

TEST_CASE("deleting an unchosen element keeps the choice") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto l = random_list(rng, 2 + static_cast<int>(rng() % 7));
    const std::string chosen = choose_from_list(l).id;
    for (std::size_t drop = 0; drop < l.size(); ++drop) {
      if (l[drop].id == chosen) continue;
      IfsList smaller = l;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
      CHECK(choose_from_list(smaller).id == chosen);
    }
  }
}

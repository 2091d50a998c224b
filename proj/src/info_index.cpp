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

#include "trustpat/info_index.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace trustpat {

void validate(const IfsElement& e) {
  if (!(e.mu >= 0.0 && e.mu <= 1.0)) {
    throw GradeError(e.id, "membership outside [0, 1]");
  }
  if (!(e.nu >= 0.0 && e.nu <= 1.0)) {
    throw GradeError(e.id, "non-membership outside [0, 1]");
  }
  if (e.mu + e.nu > 1.0 + kGradeTolerance) {
    throw GradeError(e.id, "membership + non-membership exceeds 1");
  }
}

namespace {

double plogp(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

}  // namespace

double entropy(const IfsElement& e) {
  double h = -(plogp(e.mu) + plogp(e.nu));
  return h == 0.0 ? 0.0 : h;  // no -0
}

bool beats(const IfsElement& challenger, const IfsElement& incumbent) {
  const double hc = entropy(challenger);
  const double hi = entropy(incumbent);
  if (hc != hi) return hc > hi;
  return challenger.pi() < incumbent.pi();
}

const IfsElement& choose_from_list(std::span<const IfsElement> list) {
  if (list.empty()) throw EmptyList();
  // Rank every element by (-H, π, position) and take the smallest key.
  std::vector<std::tuple<double, double, std::size_t>> keys;
  keys.reserve(list.size());
  for (std::size_t k = 0; k < list.size(); ++k) {
    keys.emplace_back(-entropy(list[k]), list[k].pi(), k);
  }
  const auto best = *std::min_element(keys.begin(), keys.end());
  return list[std::get<2>(best)];
}

const IfsElement& fold_pairwise(std::span<const IfsElement> list) {
  if (list.empty()) throw EmptyList();
  const IfsElement* winner = &list[0];
  for (const auto& next : list.subspan(1)) {
    winner = beats(next, *winner) ? &next : winner;
  }
  return *winner;
}

std::vector<IfsElement> choice_correspondence(
    std::span<const IfsElement> list) {
  if (list.empty()) throw EmptyList();
  double top = entropy(list[0]);
  for (const auto& e : list) top = std::max(top, entropy(e));
  std::vector<IfsElement> out;
  for (const auto& e : list) {
    if (entropy(e) == top) out.push_back(e);
  }
  return out;
}

}  // namespace trustpat

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

// Choice from lists of intuitionistic-fuzzy graded elements: each element
// carries a membership μ and non-membership ν, and the chooser stops at the
// element whose two messages carry the most information.

#ifndef TRUSTPAT_INFO_INDEX_HPP_
#define TRUSTPAT_INFO_INDEX_HPP_

#include <span>
#include <string>
#include <vector>

#include "trustpat/common.hpp"

namespace trustpat {

// Slack allowed on μ + ν <= 1 for decimal input such as 0.7 + 0.3.
inline constexpr double kGradeTolerance = 1e-12;

struct IfsElement {
  std::string id;
  double mu = 0.0;
  double nu = 0.0;

  // Indeterminacy 1 - μ - ν.
  double pi() const { return 1.0 - mu - nu; }
};

class GradeError : public Error {
 public:
  GradeError(const std::string& id, const std::string& msg)
      : Error("GradeError", "element '" + id + "': " + msg), id_(id) {}
  const std::string& element() const noexcept { return id_; }

 private:
  std::string id_;
};

class EmptyList : public Error {
 public:
  EmptyList() : Error("EmptyList", "cannot choose from an empty list") {}
};

// Throws GradeError when a grade is outside [0,1] or μ + ν > 1.
void validate(const IfsElement& e);

using IfsList = std::vector<IfsElement>;

// H = -(μ log2 μ + ν log2 ν) with 0 log 0 = 0; H(½,½) = 1.
double entropy(const IfsElement& e);

// Returns true when `challenger` strictly beats `incumbent`: higher H, or
// equal H and smaller π. Equal keys keep the incumbent.
bool beats(const IfsElement& challenger, const IfsElement& incumbent);

// Global argmax of H; ties by smaller π, then earlier position.
const IfsElement& choose_from_list(std::span<const IfsElement> list);

// Left fold of the pairwise comparison: D(...D(D(x1, x2), x3)..., xk).
const IfsElement& fold_pairwise(std::span<const IfsElement> list);

// Every element attaining the maximal H, list order.
std::vector<IfsElement> choice_correspondence(std::span<const IfsElement> list);

}  // namespace trustpat

#endif  // TRUSTPAT_INFO_INDEX_HPP_

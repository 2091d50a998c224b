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

#include "trustpat/preference_graph.hpp"

#include <numeric>
#include <queue>

namespace trustpat {

PreferenceMatrix::PreferenceMatrix(std::vector<ObjectId> order,
                                   std::vector<std::uint8_t> bits)
    : order_(std::move(order)), bits_(std::move(bits)) {
  const std::size_t n = order_.size();
  if (bits_.size() != n * n) {
    throw ShapeError("matrix over " + std::to_string(n) + " objects needs " +
                     std::to_string(n * n) + " entries, got " +
                     std::to_string(bits_.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (bits_[i * n + i] != 0) throw ShapeError("nonzero diagonal entry");
  }
  for (auto b : bits_) {
    if (b > 1) throw ShapeError("matrix entries must be 0 or 1");
  }
}

PreferenceMatrix PreferenceMatrix::zero(std::vector<ObjectId> order) {
  const std::size_t n = order.size();
  return PreferenceMatrix(std::move(order), std::vector<std::uint8_t>(n * n));
}

PatternVector::PatternVector(std::vector<std::uint8_t> bits, std::size_t n,
                             std::size_t periods)
    : bits_(std::move(bits)), n_(n), t_(periods) {
  if (bits_.size() != n_ * n_ * t_) {
    throw ShapeError("pattern length " + std::to_string(bits_.size()) +
                     " is not t*n^2 = " + std::to_string(t_ * n_ * n_));
  }
  for (auto b : bits_) {
    if (b > 1) throw ShapeError("pattern entries must be 0 or 1");
  }
}

std::string PatternVector::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

PatternVector PatternVector::parse(std::string_view text, std::size_t n) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c == '0' || c == '1') {
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (c != ' ') {
      throw ShapeError(std::string("invalid pattern character '") + c + "'");
    }
  }
  if (n == 0 || bits.size() % (n * n) != 0) {
    throw ShapeError("pattern length " + std::to_string(bits.size()) +
                     " is not a multiple of n^2");
  }
  const std::size_t t = bits.size() / (n * n);
  return PatternVector(std::move(bits), n, t);
}

PreferenceMatrix derive_matrix(const ValidatedEpisode& episode) {
  const std::size_t n = episode.attainable().size();
  std::vector<std::uint8_t> bits(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // Equal ranks (including i == j) leave both directions at 0.
      bits[i * n + j] = episode.rank_at(i) > episode.rank_at(j) ? 1 : 0;
    }
  }
  return PreferenceMatrix(episode.attainable(), std::move(bits));
}

std::vector<int> outdegrees(const PreferenceMatrix& m) {
  std::vector<int> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto r = m.row(i);
    out[i] = std::accumulate(r.begin(), r.end(), 0);
  }
  return out;
}

PatternVector flatten(const PreferenceMatrix& m) {
  auto bits = m.bits();
  return PatternVector(std::vector<std::uint8_t>(bits.begin(), bits.end()),
                       m.size(), 1);
}

PreferenceMatrix unflatten(const PatternVector& p,
                           std::vector<ObjectId> order) {
  if (p.periods() != 1 || p.objects() != order.size()) {
    throw ShapeError("unflatten needs a single-period pattern over " +
                     std::to_string(order.size()) + " objects");
  }
  auto bits = p.bits();
  return PreferenceMatrix(std::move(order),
                          std::vector<std::uint8_t>(bits.begin(), bits.end()));
}

namespace {

void require_same_shape(std::span<const PreferenceMatrix> ms) {
  if (ms.empty()) throw ShapeError("no matrices given");
  for (const auto& m : ms) {
    if (m.order() != ms.front().order()) {
      throw ShapeError("matrices differ in object count or order");
    }
  }
}

}  // namespace

PatternVector concat_patterns(std::span<const PreferenceMatrix> ms) {
  require_same_shape(ms);
  std::vector<std::uint8_t> bits;
  const std::size_t n = ms.front().size();
  bits.reserve(ms.size() * n * n);
  for (const auto& m : ms) {
    bits.insert(bits.end(), m.bits().begin(), m.bits().end());
  }
  return PatternVector(std::move(bits), n, ms.size());
}

PreferenceMatrix union_matrix(std::span<const PreferenceMatrix> ms) {
  require_same_shape(ms);
  const std::size_t n = ms.front().size();
  std::vector<std::uint8_t> bits(n * n, 0);
  for (const auto& m : ms) {
    for (std::size_t k = 0; k < n * n; ++k) bits[k] |= m.bits()[k];
  }
  return PreferenceMatrix(ms.front().order(), std::move(bits));
}

bool is_acyclic(const PreferenceMatrix& m) {
  // Kahn's algorithm: acyclic iff every vertex can be peeled off.
  const std::size_t n = m.size();
  std::vector<int> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) indegree[j] += m.at(i, j);
  }
  std::queue<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    std::size_t v = ready.front();
    ready.pop();
    ++removed;
    for (std::size_t j = 0; j < n; ++j) {
      if (m.at(v, j) && --indegree[j] == 0) ready.push(j);
    }
  }
  return removed == n;
}

}  // namespace trustpat

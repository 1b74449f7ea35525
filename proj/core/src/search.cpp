// Copyright 2026 The pragsynth Authors.
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

#include "pragsynth/search.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pragsynth {

RankedStream::RankedStream(const Grammar& g, FactoredDistribution q) : grammar_(g), q_(std::move(q)) {
  const auto ar = g.arities();
  bool seedable = true;
  for (int i = 0; i < kNumNonterminals; ++i) {
    const auto& f = q_[i];
    if (static_cast<int>(f.size()) != ar[static_cast<std::size_t>(i)])
      throw std::invalid_argument("factor size does not match the grammar");
    auto& ord = order_[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < f.size(); ++j)
      if (f[j] > 0) ord.push_back(static_cast<std::uint8_t>(j));
    std::stable_sort(ord.begin(), ord.end(), [&](std::uint8_t a, std::uint8_t b) { return f[a] > f[b]; });
    seedable = seedable && !ord.empty();
  }
  if (seedable) push({});
}

std::uint64_t RankedStream::key(const std::array<std::uint8_t, kNumNonterminals>& ranks) {
  std::uint64_t k = 0;
  for (auto r : ranks) k = (k << 3) | r;
  return k;
}

void RankedStream::push(const std::array<std::uint8_t, kNumNonterminals>& ranks) {
  if (!seen_.insert(key(ranks)).second) return;
  Node n;
  n.ranks = ranks;
  for (int i = 0; i < kNumNonterminals; ++i)
    n.program.choices[static_cast<std::size_t>(i)] = order_[static_cast<std::size_t>(i)][ranks[static_cast<std::size_t>(i)]];
  n.score = program_log_score(q_, n.program);
  queue_.push(n);
}

std::optional<Program> RankedStream::next() {
  while (!queue_.empty()) {
    const Node n = queue_.top();
    queue_.pop();
    ++expanded_;
    for (int i = 0; i < kNumNonterminals; ++i) {
      const auto si = static_cast<std::size_t>(i);
      if (n.ranks[si] + 1u < order_[si].size()) {
        auto succ = n.ranks;
        ++succ[si];
        push(succ);
      }
    }
    if (grammar_.is_valid(n.program)) {
      last_score_ = n.score;
      return n.program;
    }
  }
  return std::nullopt;
}

std::vector<Program> ranked_stream(const Grammar& g, const FactoredDistribution& q, std::size_t limit) {
  RankedStream stream(g, q);
  std::vector<Program> out;
  while (out.size() < limit) {
    auto p = stream.next();
    if (!p) break;
    out.push_back(*p);
  }
  return out;
}

SearchResult best_first_search(const Grammar& g, const Spec& d, const FactoredDistribution& q,
                               const SearchConfig& cfg) {
  if (cfg.budget < 1) throw std::invalid_argument("search budget must be positive");
  RankedStream stream(g, q);
  int searched = 0;
  while (searched < cfg.budget) {
    auto p = stream.next();
    if (!p) break;
    ++searched;
    if (consistent(render(g, *p), d)) return Found{*p, searched};
  }
  return Exhausted{searched};
}

}  // namespace pragsynth

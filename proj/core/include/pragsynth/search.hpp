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

// Best-first enumeration of programs under a factored distribution.
//
// Each factor's rules are sorted by decreasing probability (ties: lower rule
// index first) and a program is addressed by its rank vector. The search
// starts from the all-best vector; every dequeued vector enqueues the
// vectors that bump exactly one rank. Programs come out ordered by
// (log score desc, choice sequence asc).
//
// Rank vectors that fail the box constraints are still expanded, so valid
// programs behind them stay reachable, but they are never emitted and do not
// count against the budget. Rules with zero probability are never enqueued.

#ifndef PRAGSYNTH_SEARCH_HPP
#define PRAGSYNTH_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <queue>
#include <unordered_set>
#include <variant>
#include <vector>

#include "pragsynth/dsl.hpp"
#include "pragsynth/factored.hpp"

namespace pragsynth {

struct SearchConfig {
  int budget = 50;
};

struct Found {
  Program program;
  int rank = 0;  // 1-based count of valid programs dequeued
};

struct Exhausted {
  int explored = 0;
};

using SearchResult = std::variant<Found, Exhausted>;

/// Lazy stream of valid programs in non-increasing factored score.
class RankedStream {
 public:
  RankedStream(const Grammar& g, FactoredDistribution q);

  std::optional<Program> next();
  /// Score of the program most recently returned by next().
  double last_score() const { return last_score_; }
  /// Rank vectors dequeued so far, valid or not.
  std::size_t expanded() const { return expanded_; }

 private:
  struct Node {
    double score;
    Program program;
    std::array<std::uint8_t, kNumNonterminals> ranks;
  };
  struct Worse {
    bool operator()(const Node& a, const Node& b) const {
      if (a.score != b.score) return a.score < b.score;
      return a.program > b.program;
    }
  };

  void push(const std::array<std::uint8_t, kNumNonterminals>& ranks);
  static std::uint64_t key(const std::array<std::uint8_t, kNumNonterminals>& ranks);

  const Grammar& grammar_;
  FactoredDistribution q_;
  std::array<std::vector<std::uint8_t>, kNumNonterminals> order_;
  std::priority_queue<Node, std::vector<Node>, Worse> queue_;
  std::unordered_set<std::uint64_t> seen_;
  double last_score_ = 0;
  std::size_t expanded_ = 0;
};

/// The first `limit` programs RankedStream would produce.
std::vector<Program> ranked_stream(const Grammar& g, const FactoredDistribution& q, std::size_t limit);

SearchResult best_first_search(const Grammar& g, const Spec& d, const FactoredDistribution& q,
                               const SearchConfig& cfg = {});

}  // namespace pragsynth

#endif  // PRAGSYNTH_SEARCH_HPP

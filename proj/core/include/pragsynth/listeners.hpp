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

// The six listeners behind one interface:
//
//   J0, J1  exact literal / pragmatic over the enumerated space
//   F0, F1  mean-field literal / pragmatic from enumerated marginals
//   N0, N1  mean-field literal / pragmatic from the learned network
//
// A listener "identifies" a target when its synthesized program renders the
// same grid as the target. Joint listeners synthesize their argmax (lowest
// program index on ties); factored listeners synthesize what best-first
// search returns.

#ifndef PRAGSYNTH_LISTENERS_HPP
#define PRAGSYNTH_LISTENERS_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "pragsynth/factored.hpp"
#include "pragsynth/joint.hpp"
#include "pragsynth/neural.hpp"
#include "pragsynth/search.hpp"

namespace pragsynth {

enum class ListenerId { kJ0, kJ1, kF0, kF1, kN0, kN1 };

inline constexpr std::array<ListenerId, 6> kAllListeners = {ListenerId::kJ0, ListenerId::kJ1, ListenerId::kF0,
                                                            ListenerId::kF1, ListenerId::kN0, ListenerId::kN1};

std::string_view listener_name(ListenerId id);
std::optional<ListenerId> listener_from_name(std::string_view name);
bool is_joint(ListenerId id);
bool is_pragmatic(ListenerId id);
bool needs_network(ListenerId id);

/// Thrown when N0/N1 is used without a loaded network.
class NetworkUnavailable : public std::runtime_error {
 public:
  NetworkUnavailable() : std::runtime_error("listener needs a trained network checkpoint") {}
};

struct ListenerContext {
  const ProgramSpace* space = &ProgramSpace::standard();
  const ListenerNet* net = nullptr;
  SearchConfig search;
  CandidateDomain domain = kDefaultCandidateDomain;
  /// Ranked programs examined when collecting guesses from a factored listener.
  std::size_t guess_scan_limit = 1000;
};

JointDistribution joint_posterior(const ListenerContext& ctx, ListenerId id, const Spec& d);
FactoredDistribution factored_posterior(const ListenerContext& ctx, ListenerId id, const Spec& d);

/// Posteriors for d.prefix(1) .. d.prefix(|d|).
std::vector<JointDistribution> joint_posteriors(const ListenerContext& ctx, ListenerId id, const Spec& d);
std::vector<FactoredDistribution> factored_posteriors(const ListenerContext& ctx, ListenerId id, const Spec& d);

struct Guess {
  Program program;
  std::size_t index = 0;
  /// Probability for joint listeners, product of factors for factored ones.
  double score = 0;
};

/// Up to k programs consistent with d, best first.
std::vector<Guess> guesses(const ListenerContext& ctx, ListenerId id, const Spec& d, std::size_t k);

/// The single program the listener synthesizes from d, if any.
std::optional<std::size_t> synthesize(const ListenerContext& ctx, ListenerId id, const Spec& d);

}  // namespace pragsynth

#endif  // PRAGSYNTH_LISTENERS_HPP

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

// Mean-field listeners: the program posterior is approximated by a product of
// independent per-nonterminal distributions Q(h|D) = prod_i Q^i(R_i|D).
//
//   l^i(r, D)            = |{h in C(D) : h_i = r}| / |C(D)|
//   Q^i_L0(r | D)        = l^i(r, D), which is the exact marginal of L0
//   Q^i_S1(u | r, D<t)   = Q^i_L0(r | D<t, u) / sum_u' Q^i_L0(r | D<t, u')
//   Q^i_L1(r | D)        ∝ prod_t Q^i_S1(u_t | r, D<t)
//
// Each nonterminal runs its own recursion. The recursion is written once
// against LiteralFactorModel so the enumerated and learned literal listeners
// share it.

#ifndef PRAGSYNTH_FACTORED_HPP
#define PRAGSYNTH_FACTORED_HPP

#include <array>
#include <span>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pragsynth/joint.hpp"
#include "pragsynth/program_space.hpp"

namespace pragsynth {

/// Distance allowed between two distributions that should be equal.
inline constexpr double kDistributionTolerance = 1e-9;

struct FactoredDistribution {
  std::array<std::vector<double>, kNumNonterminals> factors;

  /// Uniform over each factor's rules.
  static FactoredDistribution uniform(const std::array<int, kNumNonterminals>& arities);
  /// Point mass at p's choices.
  static FactoredDistribution point_mass(const std::array<int, kNumNonterminals>& arities, const Program& p);

  const std::vector<double>& operator[](int nt) const { return factors[static_cast<std::size_t>(nt)]; }
  std::vector<double>& operator[](int nt) { return factors[static_cast<std::size_t>(nt)]; }
  /// Every factor non-negative and summing to 1 within kDistributionTolerance.
  bool is_normalized() const;
  double max_abs_diff(const FactoredDistribution& o) const;
};

/// prod_i q^i(p_i).
double program_probability(const FactoredDistribution& q, const Program& p);
/// sum_i log q^i(p_i), summed in nonterminal order; -inf when any factor is zero.
double program_log_score(const FactoredDistribution& q, const Program& p);

/// Fractions of the programs consistent with d using each rule.
FactoredDistribution factored_lexicon(const ProgramSpace& space, const Spec& d);
FactoredDistribution factored_literal(const ProgramSpace& space, const Spec& d);

/// Exact marginals of an arbitrary distribution over the program space.
FactoredDistribution marginals(const ProgramSpace& space, const JointDistribution& dist);

/// Q^i_L0(. | prefix + u) for every alphabet utterance u, laid out by
/// ProgramSpace::slot. `defined[u]` is false for non-candidates and for
/// extensions with no consistent program.
struct ExtensionFactors {
  int num_slots = 0;
  std::vector<double> values;
  std::vector<char> defined;

  double at(UtteranceId u, int slot) const {
    return values[static_cast<std::size_t>(u) * static_cast<std::size_t>(num_slots) + static_cast<std::size_t>(slot)];
  }
};

class LiteralFactorModel {
 public:
  virtual ~LiteralFactorModel() = default;
  virtual FactoredDistribution literal(const Spec& d) const = 0;
  /// `candidates[u]` marks the utterances the caller needs.
  virtual ExtensionFactors extensions(const Spec& prefix, std::span<const char> candidates) const = 0;
};

/// The literal listener obtained by enumerating the program space.
class EnumeratedLiteralModel final : public LiteralFactorModel {
 public:
  explicit EnumeratedLiteralModel(const ProgramSpace& space) : space_(space) {}
  FactoredDistribution literal(const Spec& d) const override { return factored_literal(space_, d); }
  ExtensionFactors extensions(const Spec& prefix, std::span<const char> candidates) const override;

 private:
  const ProgramSpace& space_;
};

struct PragmaticOptions {
  CandidateDomain domain = kDefaultCandidateDomain;
  /// Lower bound on every per-step speaker term; 0 disables. Learned
  /// listeners use it so one underflowed prediction cannot zero a rule.
  double term_floor = 0.0;
};

/// Q^i_L1 for d.prefix(n), n = 1..|d|.
std::vector<FactoredDistribution> pragmatic_prefixes(const ProgramSpace& space, const LiteralFactorModel& model,
                                                     const Spec& d, const PragmaticOptions& opts = {});

/// Dense over the alphabet; throws EmptyCandidateSet when rule (nt, choice)
/// is impossible after every candidate.
std::vector<double> factored_speaker_utt(const ProgramSpace& space, int nt, int choice, const Spec& prefix,
                                         CandidateDomain domain = kDefaultCandidateDomain);

FactoredDistribution factored_pragmatic(const ProgramSpace& space, const Spec& d,
                                        CandidateDomain domain = kDefaultCandidateDomain);

/// {"Program": [...], "Shape": [...], ..., "A2": [...]}.
nlohmann::json to_json(const FactoredDistribution& q);
FactoredDistribution factored_from_json(const nlohmann::json& j, const std::array<int, kNumNonterminals>& arities);

/// Two-factor mean-field helpers over a row-major rows x cols joint table.
std::pair<std::vector<double>, std::vector<double>> table_marginals(std::span<const double> joint, int rows,
                                                                    int cols);
/// KL(P || Q1 x Q2); +inf when Q puts zero mass where P does not.
double forward_kl(std::span<const double> joint, int rows, int cols, std::span<const double> q1,
                  std::span<const double> q2);

}  // namespace pragsynth

#endif  // PRAGSYNTH_FACTORED_HPP

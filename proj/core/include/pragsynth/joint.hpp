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

// Exact listeners and speakers over the enumerated program space.
//
//   L0(h | D)        = l(h, D) / sum_h' l(h', D)
//   S1(u | h, D<t)   = L0(h | D<t, u) / sum_u' L0(h | D<t, u')
//   S1(D | h)        = prod_t S1(u_t | h, D<t)
//   L1(h | D)        = S1(D | h) / sum_h' S1(D | h')

#ifndef PRAGSYNTH_JOINT_HPP
#define PRAGSYNTH_JOINT_HPP

#include <iosfwd>
#include <vector>

#include "pragsynth/program_space.hpp"

namespace pragsynth {

/// Which alternatives the speaker normalizes over at step t.
///   kUnseen: every alphabet utterance whose cell is not yet revealed.
///   kAll:    kUnseen plus the utterances already in the prefix.
/// Utterances contradicting the prefix get zero mass under either choice.
enum class CandidateDomain { kUnseen, kAll };

inline constexpr CandidateDomain kDefaultCandidateDomain = CandidateDomain::kUnseen;

/// Is alphabet utterance `u` a speaker alternative after `prefix`?
bool is_candidate(const ProgramSpace& space, UtteranceId u, const Spec& prefix, CandidateDomain domain);

struct JointDistribution {
  std::vector<double> probs;

  /// Highest probability, lowest program index on ties.
  std::size_t argmax() const;
  Bitset support() const;
  double sum() const;
};

JointDistribution joint_literal(const ProgramSpace& space, const Spec& d);

/// Dense over the alphabet (indexed by UtteranceId). `h` must be consistent
/// with `prefix`; throws EmptyCandidateSet when no candidate is true of `h`.
std::vector<double> joint_speaker_utt(const ProgramSpace& space, std::size_t h, const Spec& prefix,
                                      CandidateDomain domain = kDefaultCandidateDomain);

/// Product of the per-utterance speaker terms; 0 when any utterance is false of `h`.
double joint_speaker_spec(const ProgramSpace& space, std::size_t h, const Spec& d,
                          CandidateDomain domain = kDefaultCandidateDomain);
/// Same as joint_speaker_spec, accumulated in log space (-inf for zero).
double joint_speaker_spec_log(const ProgramSpace& space, std::size_t h, const Spec& d,
                              CandidateDomain domain = kDefaultCandidateDomain);

JointDistribution joint_pragmatic(const ProgramSpace& space, const Spec& d,
                                  CandidateDomain domain = kDefaultCandidateDomain);

/// joint_pragmatic(d.prefix(n)) for n = 1..|d|, sharing the per-step work.
std::vector<JointDistribution> joint_pragmatic_prefixes(const ProgramSpace& space, const Spec& d,
                                                        CandidateDomain domain = kDefaultCandidateDomain);

/// CSV with header `program_index,probability`; zero entries are skipped.
void write_csv(std::ostream& os, const JointDistribution& dist);

}  // namespace pragsynth

#endif  // PRAGSYNTH_JOINT_HPP

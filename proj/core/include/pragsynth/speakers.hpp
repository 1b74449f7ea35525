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

#ifndef PRAGSYNTH_SPEAKERS_HPP
#define PRAGSYNTH_SPEAKERS_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "pragsynth/joint.hpp"
#include "pragsynth/program_space.hpp"

namespace pragsynth {

enum class SpeakerKind { kLiteral, kPragmatic };

std::string_view speaker_name(SpeakerKind k);
std::optional<SpeakerKind> speaker_from_name(std::string_view name);

struct SpeakerConfig {
  SpeakerKind kind = SpeakerKind::kLiteral;
  int max_len = 15;
  std::uint64_t seed = 0;
  CandidateDomain domain = kDefaultCandidateDomain;
};

/// Uniformly random true utterances without repeated cells.
Spec speak_literal(const Program& h, const SpeakerConfig& cfg, const Grammar& g = Grammar::standard());

/// Greedy argmax of the exact pragmatic speaker at every step; ties go to
/// the smallest (y, x, object, colour).
Spec speak_pragmatic(const ProgramSpace& space, const Program& h, const SpeakerConfig& cfg);

Spec speak(const ProgramSpace& space, const Program& h, const SpeakerConfig& cfg);

}  // namespace pragsynth

#endif  // PRAGSYNTH_SPEAKERS_HPP

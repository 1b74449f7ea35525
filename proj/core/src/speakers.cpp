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

#include "pragsynth/speakers.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "pragsynth/errors.hpp"

namespace pragsynth {

std::string_view speaker_name(SpeakerKind k) { return k == SpeakerKind::kLiteral ? "literal" : "pragmatic"; }

std::optional<SpeakerKind> speaker_from_name(std::string_view name) {
  if (name == "literal") return SpeakerKind::kLiteral;
  if (name == "pragmatic") return SpeakerKind::kPragmatic;
  return std::nullopt;
}

Spec speak_literal(const Program& h, const SpeakerConfig& cfg, const Grammar& g) {
  if (cfg.max_len < 1) throw std::invalid_argument("max_len must be at least 1");
  auto pool = valid_utterances(render(g, h));
  std::mt19937_64 rng(cfg.seed);
  const std::size_t n = std::min(pool.size(), static_cast<std::size_t>(cfg.max_len));
  // Partial Fisher-Yates: the first n slots are a uniform draw without replacement.
  for (std::size_t i = 0; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  Spec d;
  for (std::size_t i = 0; i < n; ++i) d.add(pool[i]);
  return d;
}

Spec speak_pragmatic(const ProgramSpace& space, const Program& h, const SpeakerConfig& cfg) {
  if (cfg.max_len < 1) throw std::invalid_argument("max_len must be at least 1");
  const auto idx = space.index_of(h);
  if (!idx) throw InvalidProgram("target is not in the program space");
  const auto own = space.utterances_of(*idx);
  const std::size_t n = std::min(own.size(), static_cast<std::size_t>(cfg.max_len));

  Spec d;
  while (d.size() < n) {
    const auto dist = joint_speaker_utt(space, *idx, d, cfg.domain);
    // own is in (y, x) order with one utterance per cell, so a strict '>'
    // keeps the lexicographically smallest among ties.
    UtteranceId best = -1;
    for (UtteranceId u : own) {
      const Utterance cand = space.utterance(u);
      if (d.has_cell(cand.x, cand.y)) continue;
      if (best < 0 || dist[static_cast<std::size_t>(u)] > dist[static_cast<std::size_t>(best)]) best = u;
    }
    if (best < 0) throw EmptyCandidateSet();
    d.add(space.utterance(best));
  }
  return d;
}

Spec speak(const ProgramSpace& space, const Program& h, const SpeakerConfig& cfg) {
  return cfg.kind == SpeakerKind::kLiteral ? speak_literal(h, cfg, space.grammar()) : speak_pragmatic(space, h, cfg);
}

}  // namespace pragsynth

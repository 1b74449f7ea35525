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


// Fixtures shared by the unit tests and the acceptance runner.

#ifndef PRAGSYNTH_TESTS_HELPERS_HPP
#define PRAGSYNTH_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "oracle.hpp"
#include "pragsynth/dsl.hpp"
#include "pragsynth/program_space.hpp"

namespace testing {

/// 4x4 grid, one thickness, two rules for each of O, I, A1 and A2: 144 valid programs.
inline pragsynth::Grammar reduced_grammar() {
  using namespace pragsynth;
  Grammar g;
  g.grid_size = 4;
  g.left = g.right = g.top = g.bottom = {0, 1, 2, 3};
  g.thickness = {1};
  g.outside = {Object::kChicken, Object::kPig};
  g.inside = {Object::kPig, Object::kPebble};
  g.a1 = {IndexFn::kX, IndexFn::kY};
  g.a2 = {ColourFn::kZero, ColourFn::kMod2};
  return g;
}

inline const pragsynth::ProgramSpace& reduced_space() {
  static const pragsynth::ProgramSpace space(reduced_grammar());
  return space;
}

inline oracle::Utt to_oracle(const pragsynth::Utterance& u) {
  return {u.x, u.y, static_cast<int>(u.object), u.colour};
}

inline std::vector<oracle::Utt> to_oracle(const pragsynth::Spec& d) {
  std::vector<oracle::Utt> out;
  for (const auto& u : d) out.push_back(to_oracle(u));
  return out;
}

inline oracle::Choices to_oracle(const pragsynth::Program& p) {
  oracle::Choices c{};
  for (int i = 0; i < 12; ++i) c[static_cast<std::size_t>(i)] = p[i];
  return c;
}

/// `len` distinct-cell utterances true of program h, drawn uniformly.
inline pragsynth::Spec random_true_spec(const pragsynth::ProgramSpace& space, std::size_t h, std::size_t len,
                                        std::mt19937_64& rng) {
  auto own = space.utterances_of(h);
  std::vector<pragsynth::UtteranceId> pool(own.begin(), own.end());
  std::shuffle(pool.begin(), pool.end(), rng);
  pragsynth::Spec d;
  for (std::size_t i = 0; i < std::min(len, pool.size()); ++i) d.add(space.utterance(pool[i]));
  return d;
}

}  // namespace testing

#endif  // PRAGSYNTH_TESTS_HELPERS_HPP

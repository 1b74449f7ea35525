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


// Reference values produced once by the brute-force oracle on the reduced
// grammar and frozen here, so a regression in either side is caught.

#ifndef PRAGSYNTH_TESTS_FROZEN_HPP
#define PRAGSYNTH_TESTS_FROZEN_HPP

#include <array>
#include <utility>
#include <vector>

#include "pragsynth/dsl.hpp"

namespace testing {

struct FrozenCase {
  std::vector<pragsynth::Utterance> spec;
  std::vector<std::pair<std::size_t, double>> joint_pragmatic;  // support only
  std::array<std::vector<double>, 12> factored_pragmatic;
};

inline std::vector<FrozenCase> frozen_cases() {
  using pragsynth::Object;
  using pragsynth::Utterance;
  return {
      {{Utterance::make(0, 0, Object::kChicken, 0), Utterance::make(1, 1, Object::kPebble, 0),
        Utterance::make(1, 0, Object::kChicken, 1)},
       {{5, 0.54738407955573498}, {21, 0.33547231304050174}, {53, 0.082260512514241685}, {69, 0.034883094889521564}},
       {{{1},
         {1},
         {1, 0, 0, 0},
         {0, 0, 0.89415664864412858, 0.10584335135587145},
         {1, 0, 0, 0},
         {0, 0, 0.89415664864412858, 0.1058433513558714},
         {1},
         {1, 0},
         {0, 1},
         {1},
         {1, 0},
         {0, 1}}}},
      {{Utterance::make(2, 2, Object::kPig, 0), Utterance::make(1, 2, Object::kPig, 1)},
       {{9, 0.16495097505211601},
        {13, 0.14597486468678195},
        {25, 0.083069664664161699},
        {41, 0.18000716506114747},
        {57, 0.045083931562221437},
        {61, 0.036458666972090582},
        {65, 0.0090837109041855407},
        {73, 0.024457538333965859},
        {81, 0.02240103896431488},
        {89, 0.056958836767290043},
        {105, 0.060798022222274199},
        {109, 0.050843183215462821},
        {121, 0.034599047830473781},
        {137, 0.085313353763513747}},
       {{{1},
         {1},
         {0.55685768240917133, 0.44314231759082878, 0, 0},
         {0, 0, 0.69431208710264036, 0.30568791289735964},
         {0.55685768240917111, 0.44314231759082906, 0, 0},
         {0, 0, 0.80983917592203125, 0.19016082407796861},
         {1},
         {0.043320623615181471, 0.95667937638481848},
         {0.68546905202436004, 0.31453094797563996},
         {1},
         {1, 0},
         {0, 1}}}},
  };
}

}  // namespace testing

#endif  // PRAGSYNTH_TESTS_FROZEN_HPP

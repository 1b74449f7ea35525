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


// A stand-in for a perfectly trained network: it answers with the exact
// enumerated literal factors, so the learned-listener recursion can be
// checked against the enumerated one.

#ifndef PRAGSYNTH_TESTS_EXACT_MODEL_HPP
#define PRAGSYNTH_TESTS_EXACT_MODEL_HPP

#include "pragsynth/factored.hpp"

namespace testing {

class ExactLiteralNet final : public pragsynth::LiteralFactorModel {
 public:
  explicit ExactLiteralNet(const pragsynth::ProgramSpace& space) : inner_(space) {}
  pragsynth::FactoredDistribution literal(const pragsynth::Spec& d) const override { return inner_.literal(d); }
  pragsynth::ExtensionFactors extensions(const pragsynth::Spec& prefix, std::span<const char> candidates) const override {
    return inner_.extensions(prefix, candidates);
  }

 private:
  pragsynth::EnumeratedLiteralModel inner_;
};

}  // namespace testing

#endif  // PRAGSYNTH_TESTS_EXACT_MODEL_HPP

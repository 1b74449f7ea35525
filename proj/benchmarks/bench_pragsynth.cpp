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


#include <random>

#include <benchmark/benchmark.h>

#include "pragsynth/eval.hpp"
#include "pragsynth/listeners.hpp"

using namespace pragsynth;

namespace {

Spec sample_spec(std::size_t len, std::uint64_t seed) {
  const auto& s = ProgramSpace::standard();
  std::mt19937_64 rng(seed);
  SpeakerConfig cfg;
  cfg.kind = SpeakerKind::kPragmatic;
  cfg.seed = rng();
  return speak(s, s.program(rng() % s.size()), cfg).prefix(len);
}

void BM_JointLiteral(benchmark::State& st) {
  const auto& s = ProgramSpace::standard();
  const Spec d = sample_spec(static_cast<std::size_t>(st.range(0)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(joint_literal(s, d));
}
BENCHMARK(BM_JointLiteral)->Arg(1)->Arg(5)->Arg(15);

void BM_FactoredLiteral(benchmark::State& st) {
  const auto& s = ProgramSpace::standard();
  const Spec d = sample_spec(static_cast<std::size_t>(st.range(0)), 2);
  for (auto _ : st) benchmark::DoNotOptimize(factored_literal(s, d));
}
BENCHMARK(BM_FactoredLiteral)->Arg(1)->Arg(5)->Arg(15);

void BM_JointPragmatic(benchmark::State& st) {
  const auto& s = ProgramSpace::standard();
  const Spec d = sample_spec(static_cast<std::size_t>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(joint_pragmatic(s, d));
}
BENCHMARK(BM_JointPragmatic)->Arg(1)->Arg(5)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_FactoredPragmatic(benchmark::State& st) {
  const auto& s = ProgramSpace::standard();
  const Spec d = sample_spec(static_cast<std::size_t>(st.range(0)), 4);
  for (auto _ : st) benchmark::DoNotOptimize(factored_pragmatic(s, d));
}
BENCHMARK(BM_FactoredPragmatic)->Arg(1)->Arg(5)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_RankedStream(benchmark::State& st) {
  const auto& s = ProgramSpace::standard();
  const auto q = factored_literal(s, sample_spec(5, 5));
  const auto n = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(ranked_stream(s.grammar(), q, n));
}
BENCHMARK(BM_RankedStream)->Arg(10)->Arg(100)->Arg(1000);

void BM_BestFirstSearch(benchmark::State& st) {
  const auto& s = ProgramSpace::standard();
  const Spec d = sample_spec(7, 6);
  const auto q = factored_pragmatic(s, d);
  for (auto _ : st) benchmark::DoNotOptimize(best_first_search(s.grammar(), d, q));
}
BENCHMARK(BM_BestFirstSearch);

void BM_NetForward(benchmark::State& st) {
  const auto& s = ProgramSpace::standard();
  const ListenerNet net(s.arities(), 256, 7);
  const Spec d = sample_spec(10, 7);
  for (auto _ : st) benchmark::DoNotOptimize(net.predict(d));
}
BENCHMARK(BM_NetForward);

}  // namespace

BENCHMARK_MAIN();

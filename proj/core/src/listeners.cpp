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

#include "pragsynth/listeners.hpp"

#include <algorithm>
#include <numeric>

namespace pragsynth {

namespace {

constexpr std::array<std::string_view, 6> kNames = {"J0", "J1", "F0", "F1", "N0", "N1"};

const ListenerNet& require_net(const ListenerContext& ctx) {
  if (!ctx.net) throw NetworkUnavailable();
  return *ctx.net;
}

}  // namespace

std::string_view listener_name(ListenerId id) { return kNames[static_cast<std::size_t>(id)]; }

std::optional<ListenerId> listener_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return static_cast<ListenerId>(i);
  return std::nullopt;
}

bool is_joint(ListenerId id) { return id == ListenerId::kJ0 || id == ListenerId::kJ1; }
bool is_pragmatic(ListenerId id) { return id == ListenerId::kJ1 || id == ListenerId::kF1 || id == ListenerId::kN1; }
bool needs_network(ListenerId id) { return id == ListenerId::kN0 || id == ListenerId::kN1; }

JointDistribution joint_posterior(const ListenerContext& ctx, ListenerId id, const Spec& d) {
  switch (id) {
    case ListenerId::kJ0: return joint_literal(*ctx.space, d);
    case ListenerId::kJ1: return joint_pragmatic(*ctx.space, d, ctx.domain);
    default: throw std::invalid_argument("not a joint listener");
  }
}

FactoredDistribution factored_posterior(const ListenerContext& ctx, ListenerId id, const Spec& d) {
  switch (id) {
    case ListenerId::kF0: return factored_literal(*ctx.space, d);
    case ListenerId::kF1: return factored_pragmatic(*ctx.space, d, ctx.domain);
    case ListenerId::kN0: return require_net(ctx).predict(d);
    case ListenerId::kN1: return neural_pragmatic(*ctx.space, require_net(ctx), d, ctx.domain);
    default: throw std::invalid_argument("not a factored listener");
  }
}

std::vector<JointDistribution> joint_posteriors(const ListenerContext& ctx, ListenerId id, const Spec& d) {
  if (id == ListenerId::kJ1) return joint_pragmatic_prefixes(*ctx.space, d, ctx.domain);
  std::vector<JointDistribution> out;
  for (std::size_t n = 1; n <= d.size(); ++n) out.push_back(joint_posterior(ctx, id, d.prefix(n)));
  return out;
}

std::vector<FactoredDistribution> factored_posteriors(const ListenerContext& ctx, ListenerId id, const Spec& d) {
  switch (id) {
    case ListenerId::kF1:
      return pragmatic_prefixes(*ctx.space, EnumeratedLiteralModel(*ctx.space), d, {ctx.domain, 0.0});
    case ListenerId::kN1:
      return pragmatic_prefixes(*ctx.space, NeuralLiteralModel(*ctx.space, require_net(ctx)), d,
                                {ctx.domain, kNeuralTermFloor});
    default: {
      std::vector<FactoredDistribution> out;
      for (std::size_t n = 1; n <= d.size(); ++n) out.push_back(factored_posterior(ctx, id, d.prefix(n)));
      return out;
    }
  }
}

std::vector<Guess> guesses(const ListenerContext& ctx, ListenerId id, const Spec& d, std::size_t k) {
  const ProgramSpace& space = *ctx.space;
  std::vector<Guess> out;
  if (is_joint(id)) {
    const auto dist = joint_posterior(ctx, id, d);
    std::vector<std::size_t> idx;
    dist.support().for_each([&](std::size_t h) { idx.push_back(h); });
    const std::size_t n = std::min(k, idx.size());
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n), idx.end(),
                      [&](std::size_t a, std::size_t b) {
                        return dist.probs[a] != dist.probs[b] ? dist.probs[a] > dist.probs[b] : a < b;
                      });
    for (std::size_t i = 0; i < n; ++i) out.push_back({space.program(idx[i]), idx[i], dist.probs[idx[i]]});
    return out;
  }
  const auto q = factored_posterior(ctx, id, d);
  RankedStream stream(space.grammar(), q);
  for (std::size_t scanned = 0; scanned < ctx.guess_scan_limit && out.size() < k; ++scanned) {
    auto p = stream.next();
    if (!p) break;
    const auto h = *space.index_of(*p);
    if (consistent(space.grid(h), d)) out.push_back({*p, h, program_probability(q, *p)});
  }
  return out;
}

std::optional<std::size_t> synthesize(const ListenerContext& ctx, ListenerId id, const Spec& d) {
  if (is_joint(id)) return joint_posterior(ctx, id, d).argmax();
  const auto r = best_first_search(ctx.space->grammar(), d, factored_posterior(ctx, id, d), ctx.search);
  if (const auto* f = std::get_if<Found>(&r)) return ctx.space->index_of(f->program);
  return std::nullopt;
}

}  // namespace pragsynth

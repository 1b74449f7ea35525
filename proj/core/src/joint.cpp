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

#include "pragsynth/joint.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "pragsynth/errors.hpp"

namespace pragsynth {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<double> counts_over(const ProgramSpace& space, const Bitset& c, bool is_root) {
  const auto alphabet = static_cast<std::size_t>(space.alphabet_size());
  std::vector<double> cnt(alphabet);
  if (is_root) {
    const auto& root = space.root_extension_counts().count;
    for (std::size_t u = 0; u < alphabet; ++u) cnt[u] = root[u];
    return cnt;
  }
  for (std::size_t u = 0; u < alphabet; ++u)
    cnt[u] = static_cast<double>(Bitset::count_and(c, space.consistent_with(static_cast<UtteranceId>(u))));
  return cnt;
}

JointDistribution normalize_log(const ProgramSpace& space, const Bitset& support, const std::vector<double>& logp) {
  double mx = kNegInf;
  support.for_each([&](std::size_t h) { mx = std::max(mx, logp[h]); });
  if (mx == kNegInf) throw NoConsistentProgram();
  JointDistribution out;
  out.probs.assign(space.size(), 0.0);
  double z = 0;
  support.for_each([&](std::size_t h) { z += (out.probs[h] = std::exp(logp[h] - mx)); });
  for (auto& p : out.probs) p /= z;
  return out;
}

}  // namespace

bool is_candidate(const ProgramSpace& space, UtteranceId u, const Spec& prefix, CandidateDomain domain) {
  const Utterance cand = space.utterance(u);
  for (const auto& v : prefix) {
    if (!v.same_cell(cand)) continue;
    return domain == CandidateDomain::kAll && space.utterance_id(v) == u;
  }
  return true;
}

std::size_t JointDistribution::argmax() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < probs.size(); ++i)
    if (probs[i] > probs[best]) best = i;
  return best;
}

Bitset JointDistribution::support() const {
  Bitset s(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i)
    if (probs[i] > 0) s.set(i);
  return s;
}

double JointDistribution::sum() const { return std::accumulate(probs.begin(), probs.end(), 0.0); }

JointDistribution joint_literal(const ProgramSpace& space, const Spec& d) {
  const Bitset c = space.consistent_set(d);
  const std::size_t n = c.count();
  if (n == 0) throw NoConsistentProgram();
  JointDistribution out;
  out.probs.assign(space.size(), 0.0);
  const double p = 1.0 / static_cast<double>(n);
  c.for_each([&](std::size_t h) { out.probs[h] = p; });
  return out;
}

std::vector<double> joint_speaker_utt(const ProgramSpace& space, std::size_t h, const Spec& prefix,
                                      CandidateDomain domain) {
  const Bitset c = space.consistent_set(prefix);
  if (!c.test(h)) throw std::invalid_argument("program is inconsistent with the prefix");
  std::vector<double> out(static_cast<std::size_t>(space.alphabet_size()), 0.0);
  double z = 0;
  // Only utterances true of h have a nonzero L0(h | prefix, u).
  for (UtteranceId u : space.utterances_of(h)) {
    if (!is_candidate(space, u, prefix, domain)) continue;
    const auto n = Bitset::count_and(c, space.consistent_with(u));
    z += (out[static_cast<std::size_t>(u)] = 1.0 / static_cast<double>(n));
  }
  if (z == 0) throw EmptyCandidateSet();
  for (auto& p : out) p /= z;
  return out;
}

double joint_speaker_spec_log(const ProgramSpace& space, std::size_t h, const Spec& d, CandidateDomain domain) {
  double acc = 0;
  Spec prefix;
  for (const auto& u : d) {
    if (!space.consistent_with(space.utterance_id(u)).test(h)) return kNegInf;
    const auto dist = joint_speaker_utt(space, h, prefix, domain);
    acc += std::log(dist[static_cast<std::size_t>(space.utterance_id(u))]);
    prefix.add(u);
  }
  return acc;
}

double joint_speaker_spec(const ProgramSpace& space, std::size_t h, const Spec& d, CandidateDomain domain) {
  return std::exp(joint_speaker_spec_log(space, h, d, domain));
}

std::vector<JointDistribution> joint_pragmatic_prefixes(const ProgramSpace& space, const Spec& d,
                                                        CandidateDomain domain) {
  std::vector<JointDistribution> out;
  out.reserve(d.size());
  std::vector<double> logp(space.size(), 0.0);
  std::vector<double> inv(static_cast<std::size_t>(space.alphabet_size()));
  std::vector<char> cand(inv.size());
  Bitset c = space.all();
  Spec prefix;

  for (std::size_t t = 0; t < d.size(); ++t) {
    const auto cnt = counts_over(space, c, t == 0);
    for (std::size_t u = 0; u < inv.size(); ++u) {
      inv[u] = cnt[u] > 0 ? 1.0 / cnt[u] : 0.0;
      cand[u] = is_candidate(space, static_cast<UtteranceId>(u), prefix, domain);
    }
    const UtteranceId ut = space.utterance_id(d[t]);
    c &= space.consistent_with(ut);
    if (c.none()) throw NoConsistentProgram();

    // Incremental: programs leaving the consistent set keep stale values but
    // are outside every later support.
    const double log_num = -std::log(cnt[static_cast<std::size_t>(ut)]);
    c.for_each([&](std::size_t h) {
      double z = 0;
      for (UtteranceId u : space.utterances_of(h))
        if (cand[static_cast<std::size_t>(u)]) z += inv[static_cast<std::size_t>(u)];
      logp[h] += log_num - std::log(z);
    });
    out.push_back(normalize_log(space, c, logp));
    prefix.add(d[t]);
  }
  return out;
}

JointDistribution joint_pragmatic(const ProgramSpace& space, const Spec& d, CandidateDomain domain) {
  if (d.empty()) return joint_literal(space, d);
  return joint_pragmatic_prefixes(space, d, domain).back();
}

void write_csv(std::ostream& os, const JointDistribution& dist) {
  os << "program_index,probability\n";
  os.precision(17);
  for (std::size_t i = 0; i < dist.probs.size(); ++i)
    if (dist.probs[i] > 0) os << i << ',' << dist.probs[i] << '\n';
}

}  // namespace pragsynth

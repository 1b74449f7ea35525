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

#include "pragsynth/factored.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "pragsynth/errors.hpp"

namespace pragsynth {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

FactoredDistribution from_slot_log_scores(const ProgramSpace& space, const std::vector<double>& logacc) {
  FactoredDistribution q;
  for (int i = 0; i < kNumNonterminals; ++i) {
    const int a = space.arities()[static_cast<std::size_t>(i)];
    const int off = space.slot_offset(i);
    double mx = kNegInf;
    for (int j = 0; j < a; ++j) mx = std::max(mx, logacc[static_cast<std::size_t>(off + j)]);
    if (mx == kNegInf) throw NoConsistentProgram("every rule of " + std::string(nonterminal_name(i)) + " has zero mass");
    auto& f = q[i];
    f.resize(static_cast<std::size_t>(a));
    double z = 0;
    for (int j = 0; j < a; ++j) z += (f[static_cast<std::size_t>(j)] = std::exp(logacc[static_cast<std::size_t>(off + j)] - mx));
    for (auto& v : f) v /= z;
  }
  return q;
}

}  // namespace

FactoredDistribution FactoredDistribution::uniform(const std::array<int, kNumNonterminals>& arities) {
  FactoredDistribution q;
  for (int i = 0; i < kNumNonterminals; ++i) {
    const int a = arities[static_cast<std::size_t>(i)];
    q[i].assign(static_cast<std::size_t>(a), 1.0 / a);
  }
  return q;
}

FactoredDistribution FactoredDistribution::point_mass(const std::array<int, kNumNonterminals>& arities,
                                                      const Program& p) {
  FactoredDistribution q;
  for (int i = 0; i < kNumNonterminals; ++i) {
    q[i].assign(static_cast<std::size_t>(arities[static_cast<std::size_t>(i)]), 0.0);
    q[i].at(static_cast<std::size_t>(p[i])) = 1.0;
  }
  return q;
}

bool FactoredDistribution::is_normalized() const {
  for (const auto& f : factors) {
    if (f.empty()) return false;
    double s = 0;
    for (double v : f) {
      if (!(v >= 0)) return false;
      s += v;
    }
    if (std::abs(s - 1.0) > kDistributionTolerance) return false;
  }
  return true;
}

double FactoredDistribution::max_abs_diff(const FactoredDistribution& o) const {
  double m = 0;
  for (int i = 0; i < kNumNonterminals; ++i) {
    const auto& a = (*this)[i];
    const auto& b = o[i];
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  }
  return m;
}

double program_probability(const FactoredDistribution& q, const Program& p) {
  double prob = 1;
  for (int i = 0; i < kNumNonterminals; ++i) prob *= q[i].at(static_cast<std::size_t>(p[i]));
  return prob;
}

double program_log_score(const FactoredDistribution& q, const Program& p) {
  double s = 0;
  for (int i = 0; i < kNumNonterminals; ++i) {
    const double v = q[i].at(static_cast<std::size_t>(p[i]));
    if (v <= 0) return kNegInf;
    s += std::log(v);
  }
  return s;
}

FactoredDistribution factored_lexicon(const ProgramSpace& space, const Spec& d) {
  const Bitset c = space.consistent_set(d);
  const std::size_t n = c.count();
  if (n == 0) throw NoConsistentProgram();
  std::vector<std::size_t> cnt(static_cast<std::size_t>(space.num_slots()), 0);
  c.for_each([&](std::size_t h) {
    const Program& p = space.program(h);
    for (int i = 0; i < kNumNonterminals; ++i) ++cnt[static_cast<std::size_t>(space.slot(i, p[i]))];
  });
  FactoredDistribution q;
  for (int i = 0; i < kNumNonterminals; ++i) {
    const int a = space.arities()[static_cast<std::size_t>(i)];
    q[i].resize(static_cast<std::size_t>(a));
    for (int j = 0; j < a; ++j)
      q[i][static_cast<std::size_t>(j)] =
          static_cast<double>(cnt[static_cast<std::size_t>(space.slot(i, j))]) / static_cast<double>(n);
  }
  return q;
}

FactoredDistribution factored_literal(const ProgramSpace& space, const Spec& d) {
  FactoredDistribution q = factored_lexicon(space, d);
  for (auto& f : q.factors) {
    const double s = std::accumulate(f.begin(), f.end(), 0.0);
    for (auto& v : f) v /= s;
  }
  return q;
}

FactoredDistribution marginals(const ProgramSpace& space, const JointDistribution& dist) {
  FactoredDistribution q;
  for (int i = 0; i < kNumNonterminals; ++i) q[i].assign(static_cast<std::size_t>(space.arities()[static_cast<std::size_t>(i)]), 0.0);
  for (std::size_t h = 0; h < space.size(); ++h) {
    const double p = dist.probs[h];
    if (p == 0) continue;
    const Program& prog = space.program(h);
    for (int i = 0; i < kNumNonterminals; ++i) q[i][static_cast<std::size_t>(prog[i])] += p;
  }
  return q;
}

ExtensionFactors EnumeratedLiteralModel::extensions(const Spec& prefix, std::span<const char> candidates) const {
  const int slots = space_.num_slots();
  const auto alphabet = static_cast<std::size_t>(space_.alphabet_size());
  ExtensionCounts local;
  const ExtensionCounts* counts = &space_.root_extension_counts();
  if (!prefix.empty()) {
    local = space_.extension_counts(space_.consistent_set(prefix), true);
    counts = &local;
  }
  ExtensionFactors out;
  out.num_slots = slots;
  out.values.assign(alphabet * static_cast<std::size_t>(slots), 0.0);
  out.defined.assign(alphabet, 0);
  for (std::size_t u = 0; u < alphabet; ++u) {
    const auto n = counts->count[u];
    if (!candidates[u] || n == 0) continue;
    out.defined[u] = 1;
    const double inv = 1.0 / static_cast<double>(n);
    for (int s = 0; s < slots; ++s) {
      const std::size_t k = u * static_cast<std::size_t>(slots) + static_cast<std::size_t>(s);
      out.values[k] = static_cast<double>(counts->slot_count[k]) * inv;
    }
  }
  return out;
}

std::vector<FactoredDistribution> pragmatic_prefixes(const ProgramSpace& space, const LiteralFactorModel& model,
                                                     const Spec& d, const PragmaticOptions& opts) {
  const int slots = space.num_slots();
  const auto alphabet = static_cast<std::size_t>(space.alphabet_size());
  std::vector<double> logacc(static_cast<std::size_t>(slots), 0.0);
  std::vector<double> denom(static_cast<std::size_t>(slots));
  std::vector<char> cand(alphabet);
  std::vector<FactoredDistribution> out;
  out.reserve(d.size());
  Spec prefix;

  for (const auto& ut : d) {
    for (std::size_t u = 0; u < alphabet; ++u) cand[u] = is_candidate(space, static_cast<UtteranceId>(u), prefix, opts.domain);
    const ExtensionFactors ext = model.extensions(prefix, cand);
    const UtteranceId said = space.utterance_id(ut);
    if (!ext.defined[static_cast<std::size_t>(said)]) throw NoConsistentProgram();

    std::fill(denom.begin(), denom.end(), 0.0);
    for (std::size_t u = 0; u < alphabet; ++u) {
      if (!ext.defined[u]) continue;
      for (int s = 0; s < slots; ++s) denom[static_cast<std::size_t>(s)] += ext.at(static_cast<UtteranceId>(u), s);
    }
    for (int s = 0; s < slots; ++s) {
      const double num = ext.at(said, s);
      double term = num > 0 && denom[static_cast<std::size_t>(s)] > 0 ? num / denom[static_cast<std::size_t>(s)] : 0.0;
      term = std::max(term, opts.term_floor);
      logacc[static_cast<std::size_t>(s)] += term > 0 ? std::log(term) : kNegInf;
    }
    out.push_back(from_slot_log_scores(space, logacc));
    prefix.add(ut);
  }
  return out;
}

std::vector<double> factored_speaker_utt(const ProgramSpace& space, int nt, int choice, const Spec& prefix,
                                         CandidateDomain domain) {
  const auto alphabet = static_cast<std::size_t>(space.alphabet_size());
  std::vector<char> cand(alphabet);
  for (std::size_t u = 0; u < alphabet; ++u) cand[u] = is_candidate(space, static_cast<UtteranceId>(u), prefix, domain);
  const ExtensionFactors ext = EnumeratedLiteralModel(space).extensions(prefix, cand);
  const int s = space.slot(nt, choice);
  std::vector<double> out(alphabet, 0.0);
  double z = 0;
  for (std::size_t u = 0; u < alphabet; ++u)
    if (ext.defined[u]) z += (out[u] = ext.at(static_cast<UtteranceId>(u), s));
  if (z == 0) throw EmptyCandidateSet();
  for (auto& v : out) v /= z;
  return out;
}

FactoredDistribution factored_pragmatic(const ProgramSpace& space, const Spec& d, CandidateDomain domain) {
  if (d.empty()) {
    // Every rule's speaker product is empty; normalizing gives uniform.
    return FactoredDistribution::uniform(space.arities());
  }
  return pragmatic_prefixes(space, EnumeratedLiteralModel(space), d, {domain, 0.0}).back();
}

nlohmann::json to_json(const FactoredDistribution& q) {
  nlohmann::json j = nlohmann::json::object();
  for (int i = 0; i < kNumNonterminals; ++i) j[std::string(nonterminal_name(i))] = q[i];
  return j;
}

FactoredDistribution factored_from_json(const nlohmann::json& j, const std::array<int, kNumNonterminals>& arities) {
  FactoredDistribution q;
  for (int i = 0; i < kNumNonterminals; ++i) {
    const auto name = std::string(nonterminal_name(i));
    if (!j.contains(name)) throw FormatError("missing factor " + name);
    q[i] = j.at(name).get<std::vector<double>>();
    if (static_cast<int>(q[i].size()) != arities[static_cast<std::size_t>(i)])
      throw FormatError("factor " + name + " has the wrong length");
  }
  return q;
}

std::pair<std::vector<double>, std::vector<double>> table_marginals(std::span<const double> joint, int rows,
                                                                    int cols) {
  std::vector<double> r(static_cast<std::size_t>(rows), 0.0), c(static_cast<std::size_t>(cols), 0.0);
  for (int a = 0; a < rows; ++a)
    for (int b = 0; b < cols; ++b) {
      const double p = joint[static_cast<std::size_t>(a * cols + b)];
      r[static_cast<std::size_t>(a)] += p;
      c[static_cast<std::size_t>(b)] += p;
    }
  return {r, c};
}

double forward_kl(std::span<const double> joint, int rows, int cols, std::span<const double> q1,
                  std::span<const double> q2) {
  double kl = 0;
  for (int a = 0; a < rows; ++a)
    for (int b = 0; b < cols; ++b) {
      const double p = joint[static_cast<std::size_t>(a * cols + b)];
      if (p == 0) continue;
      const double q = q1[static_cast<std::size_t>(a)] * q2[static_cast<std::size_t>(b)];
      if (q == 0) return std::numeric_limits<double>::infinity();
      kl += p * (std::log(p) - std::log(q));
    }
  return kl;
}

}  // namespace pragsynth

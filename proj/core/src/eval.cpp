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

#include "pragsynth/eval.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <thread>

#include "pragsynth/errors.hpp"
#include "pragsynth/json_io.hpp"

namespace pragsynth {

namespace {

constexpr std::array<std::string_view, 4> kSourceNames = {"machine_literal", "machine_pragmatic", "human_literal",
                                                          "human_pragmatic"};

bool identifies(const ProgramSpace& space, std::optional<std::size_t> guess, std::size_t target) {
  return guess && space.same_rendering(*guess, target);
}

std::optional<std::size_t> search_index(const ListenerContext& ctx, const Spec& d, const FactoredDistribution& q) {
  const auto r = best_first_search(ctx.space->grammar(), d, q, ctx.search);
  if (const auto* f = std::get_if<Found>(&r)) return ctx.space->index_of(f->program);
  return std::nullopt;
}

MarginalTables tables(const ProgramSpace& space, const JointDistribution& joint, const FactoredDistribution& q,
                      int a, int b) {
  const auto ra = static_cast<std::size_t>(space.arities()[static_cast<std::size_t>(a)]);
  const auto rb = static_cast<std::size_t>(space.arities()[static_cast<std::size_t>(b)]);
  MarginalTables t;
  t.joint.assign(ra, std::vector<double>(rb, 0.0));
  t.factored.assign(ra, std::vector<double>(rb, 0.0));
  for (std::size_t h = 0; h < space.size(); ++h) {
    if (joint.probs[h] == 0) continue;
    const Program& p = space.program(h);
    t.joint[static_cast<std::size_t>(p[a])][static_cast<std::size_t>(p[b])] += joint.probs[h];
  }
  t.factor_a = q[a];
  t.factor_b = q[b];
  double tv = 0;
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < rb; ++j) {
      t.factored[i][j] = q[a][i] * q[b][j];
      tv += std::abs(t.factored[i][j] - t.joint[i][j]);
    }
  t.total_variation = tv / 2;
  return t;
}

nlohmann::json tables_json(const MarginalTables& t) {
  return {{"joint", t.joint},
          {"factored", t.factored},
          {"factor_a", t.factor_a},
          {"factor_b", t.factor_b},
          {"total_variation", t.total_variation}};
}

}  // namespace

std::string_view source_name(TrialSource s) { return kSourceNames[static_cast<std::size_t>(s)]; }

std::optional<TrialSource> source_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kSourceNames.size(); ++i)
    if (kSourceNames[i] == name) return static_cast<TrialSource>(i);
  return std::nullopt;
}

nlohmann::json to_json(const Trial& t) {
  return {{"target", to_json(t.target)}, {"utterances", to_json(t.utterances)}, {"source", std::string(source_name(t.source))}};
}

Trial trial_from_json(const nlohmann::json& j, const Grammar& g) {
  if (!j.is_object()) throw FormatError("trial must be an object");
  for (const char* key : {"target", "utterances", "source"})
    if (!j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  Trial t;
  t.target = program_from_json(j.at("target"), g);
  if (!j.at("source").is_string()) throw FormatError("source must be a string");
  const auto src = source_from_name(j.at("source").get<std::string>());
  if (!src) throw FormatError("unknown source '" + j.at("source").get<std::string>() + "'");
  t.source = *src;
  t.utterances = spec_from_json(j.at("utterances"), g);
  const Grid grid = render(g, t.target);
  for (std::size_t k = 0; k < t.utterances.size(); ++k) {
    const auto& u = t.utterances[k];
    if (!matches(grid.at(u.x, u.y), u))
      throw FormatError("utterance " + std::to_string(k + 1) + " (" + std::to_string(u.x) + "," + std::to_string(u.y) +
                        "," + std::string(object_name(u.object)) + "," + std::to_string(u.colour) +
                        ") is false of the target");
  }
  return t;
}

void write_trials(std::ostream& os, std::span<const Trial> trials) {
  for (const auto& t : trials) os << to_json(t).dump() << '\n';
}

std::vector<Trial> read_trials(std::istream& is, const Grammar& g) {
  std::vector<Trial> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw FormatError(std::string("invalid JSON: ") + e.what(), lineno);
    }
    try {
      out.push_back(trial_from_json(j, g));
    } catch (const FormatError& e) {
      throw FormatError(e.what(), lineno);
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(e.what(), lineno);
    }
  }
  return out;
}

std::vector<Trial> ingest_trials(const std::string& path, const Grammar& g) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  return read_trials(is, g);
}

std::vector<Trial> generate_trials(const ProgramSpace& space, SpeakerKind kind, int n, std::uint64_t seed,
                                   int max_len) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, space.size() - 1);
  std::vector<Trial> out;
  out.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) {
    Trial t;
    t.target = space.program(pick(rng));
    SpeakerConfig cfg;
    cfg.kind = kind;
    cfg.max_len = max_len;
    cfg.seed = rng();
    t.utterances = speak(space, t.target, cfg);
    t.source = kind == SpeakerKind::kLiteral ? TrialSource::kMachineLiteral : TrialSource::kMachinePragmatic;
    out.push_back(std::move(t));
  }
  return out;
}

std::optional<int> run_trial(const ListenerContext& ctx, const Trial& t, ListenerId listener) {
  const ProgramSpace& space = *ctx.space;
  const auto target = space.index_of(t.target);
  if (!target) throw InvalidProgram("trial target is not in the program space");
  const Spec& d = t.utterances;
  const int total = static_cast<int>(d.size());

  switch (listener) {
    case ListenerId::kJ0: {
      // Uniform posterior: the tie-broken argmax is the lowest consistent index.
      Bitset c = space.all();
      for (int n = 1; n <= total; ++n) {
        c &= space.consistent_with(space.utterance_id(d[static_cast<std::size_t>(n - 1)]));
        if (c.none()) throw NoConsistentProgram();
        if (space.same_rendering(c.find_first(), *target)) return n;
      }
      return std::nullopt;
    }
    case ListenerId::kJ1: {
      const auto posts = joint_pragmatic_prefixes(space, d, ctx.domain);
      for (int n = 1; n <= total; ++n)
        if (space.same_rendering(posts[static_cast<std::size_t>(n - 1)].argmax(), *target)) return n;
      return std::nullopt;
    }
    case ListenerId::kF1:
    case ListenerId::kN1: {
      const auto posts = factored_posteriors(ctx, listener, d);
      for (int n = 1; n <= total; ++n)
        if (identifies(space, search_index(ctx, d.prefix(static_cast<std::size_t>(n)), posts[static_cast<std::size_t>(n - 1)]),
                       *target))
          return n;
      return std::nullopt;
    }
    case ListenerId::kF0:
    case ListenerId::kN0: {
      for (int n = 1; n <= total; ++n) {
        const Spec prefix = d.prefix(static_cast<std::size_t>(n));
        if (identifies(space, search_index(ctx, prefix, factored_posterior(ctx, listener, prefix)), *target)) return n;
      }
      return std::nullopt;
    }
  }
  throw std::invalid_argument("unknown listener");
}

std::vector<CurvePoint> run_matrix(const ListenerContext& ctx, std::span<const Trial> trials,
                                   std::span<const ListenerId> listeners, unsigned workers) {
  const std::size_t nl = listeners.size();
  std::vector<std::optional<int>> results(nl * trials.size());
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < trials.size(); i += stride)
      for (std::size_t l = 0; l < nl; ++l) results[l * trials.size() + i] = run_trial(ctx, trials[i], listeners[l]);
  };
  workers = std::max(1u, workers);
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }

  std::vector<CurvePoint> out;
  for (std::size_t l = 0; l < nl; ++l) {
    for (std::size_t s = 0; s < kSourceNames.size(); ++s) {
      const auto source = static_cast<TrialSource>(s);
      int count = 0;
      int max_len = 0;
      std::vector<int> solved_at;
      for (std::size_t i = 0; i < trials.size(); ++i) {
        if (trials[i].source != source) continue;
        ++count;
        max_len = std::max(max_len, static_cast<int>(trials[i].utterances.size()));
        if (const auto& r = results[l * trials.size() + i]) solved_at.push_back(*r);
      }
      if (count == 0) continue;
      for (int n = 1; n <= max_len; ++n) {
        const auto solved = std::count_if(solved_at.begin(), solved_at.end(), [n](int r) { return r <= n; });
        out.push_back({listeners[l], source, n, static_cast<double>(solved) / count, count});
      }
    }
  }
  return out;
}

void write_curves_csv(std::ostream& os, std::span<const CurvePoint> points) {
  os << "listener,speaker,n,accuracy,n_trials\n";
  for (const auto& p : points)
    os << listener_name(p.listener) << ',' << source_name(p.speaker) << ',' << p.n_utterances << ',' << p.accuracy
       << ',' << p.n_trials << '\n';
}

MarginalReport marginal_report(const ListenerContext& ctx, const Spec& d, std::pair<int, int> pair,
                               std::optional<Program> target) {
  const ProgramSpace& space = *ctx.space;
  const auto [a, b] = pair;
  if (a < 0 || a >= kNumNonterminals || b < 0 || b >= kNumNonterminals) throw std::out_of_range("nonterminal pair");
  MarginalReport r;
  r.nt_a = a;
  r.nt_b = b;
  for (int j = 0; j < space.arities()[static_cast<std::size_t>(a)]; ++j) r.labels_a.push_back(space.grammar().rule_label(a, j));
  for (int j = 0; j < space.arities()[static_cast<std::size_t>(b)]; ++j) r.labels_b.push_back(space.grammar().rule_label(b, j));
  r.literal = tables(space, joint_literal(space, d), factored_literal(space, d), a, b);
  r.pragmatic = tables(space, joint_pragmatic(space, d, ctx.domain), factored_pragmatic(space, d, ctx.domain), a, b);
  if (target) r.target_cell = std::pair{(*target)[a], (*target)[b]};
  return r;
}

nlohmann::json to_json(const MarginalReport& r) {
  nlohmann::json j = {{"v", 1},
                      {"pair", {std::string(nonterminal_name(r.nt_a)), std::string(nonterminal_name(r.nt_b))}},
                      {"rules_a", r.labels_a},
                      {"rules_b", r.labels_b},
                      {"literal", tables_json(r.literal)},
                      {"pragmatic", tables_json(r.pragmatic)}};
  j["target"] = r.target_cell ? nlohmann::json{r.target_cell->first, r.target_cell->second} : nlohmann::json(nullptr);
  return j;
}

}  // namespace pragsynth

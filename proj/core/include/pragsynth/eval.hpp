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

// Communication experiments: trials (a target plus the utterances a speaker
// produced for it), the prefix protocol that finds how many utterances a
// listener needs, accuracy curves, and two-nonterminal marginal tables.
//
// Trial files are JSON Lines:
//   {"target": [12 ints], "utterances": [{x, y, object, colour}, ...], "source": "machine_pragmatic"}
// Curve files are CSV with the header `listener,speaker,n,accuracy,n_trials`.

#ifndef PRAGSYNTH_EVAL_HPP
#define PRAGSYNTH_EVAL_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pragsynth/listeners.hpp"
#include "pragsynth/speakers.hpp"

namespace pragsynth {

enum class TrialSource { kMachineLiteral, kMachinePragmatic, kHumanLiteral, kHumanPragmatic };

std::string_view source_name(TrialSource s);
std::optional<TrialSource> source_from_name(std::string_view name);

struct Trial {
  Program target;
  Spec utterances;
  TrialSource source = TrialSource::kMachineLiteral;

  friend bool operator==(const Trial&, const Trial&) = default;
};

nlohmann::json to_json(const Trial& t);
/// Validates the target, drops repeated cells (first occurrence wins) and
/// rejects utterances that are false of the target. Throws FormatError.
Trial trial_from_json(const nlohmann::json& j, const Grammar& g = Grammar::standard());

void write_trials(std::ostream& os, std::span<const Trial> trials);
/// Blank lines are skipped; errors carry the 1-based line number.
std::vector<Trial> read_trials(std::istream& is, const Grammar& g = Grammar::standard());
std::vector<Trial> ingest_trials(const std::string& path, const Grammar& g = Grammar::standard());

/// `n` uniformly drawn targets, each described by the given speaker.
std::vector<Trial> generate_trials(const ProgramSpace& space, SpeakerKind kind, int n, std::uint64_t seed,
                                   int max_len = 15);

/// Smallest prefix length whose synthesized program renders like the
/// target, or nullopt if no prefix works.
std::optional<int> run_trial(const ListenerContext& ctx, const Trial& t, ListenerId listener);

struct CurvePoint {
  ListenerId listener;
  TrialSource speaker;
  int n_utterances = 0;
  double accuracy = 0;
  int n_trials = 0;
};

/// Cumulative accuracy for every (listener, speaker source) pair present,
/// for n = 1 .. longest spec of that source. `workers` > 1 fans trials out
/// over threads; results do not depend on it.
std::vector<CurvePoint> run_matrix(const ListenerContext& ctx, std::span<const Trial> trials,
                                   std::span<const ListenerId> listeners, unsigned workers = 1);

void write_curves_csv(std::ostream& os, std::span<const CurvePoint> points);

struct MarginalTables {
  std::vector<std::vector<double>> joint;     // exact 2-D marginal
  std::vector<std::vector<double>> factored;  // outer product of the factors
  std::vector<double> factor_a, factor_b;
  double total_variation = 0;
};

struct MarginalReport {
  int nt_a = 0;
  int nt_b = 0;
  std::vector<std::string> labels_a, labels_b;
  MarginalTables literal;    // J0 vs F0
  MarginalTables pragmatic;  // J1 vs F1
  std::optional<std::pair<int, int>> target_cell;
};

MarginalReport marginal_report(const ListenerContext& ctx, const Spec& d, std::pair<int, int> pair,
                               std::optional<Program> target = std::nullopt);
nlohmann::json to_json(const MarginalReport& r);

}  // namespace pragsynth

#endif  // PRAGSYNTH_EVAL_HPP

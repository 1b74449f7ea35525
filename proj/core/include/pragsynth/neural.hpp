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

// Learned literal listener.
//
// A spec is encoded as a 7x7x6 binary tensor T: utterance (x, y, object,
// colour) sets T[x][y][object] and T[x][y][3 + colour]. The flattened tensor
// goes through two ReLU layers of 256 units and a linear head of 12x7
// logits; each row is a softmax over the rules that exist for that
// nonterminal, giving a FactoredDistribution. Training minimizes the summed
// per-factor cross-entropy against the exact marginals of the literal
// listener, on specs drawn from the literal speaker.

#ifndef PRAGSYNTH_NEURAL_HPP
#define PRAGSYNTH_NEURAL_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pragsynth/factored.hpp"
#include "pragsynth/program_space.hpp"

namespace pragsynth {

inline constexpr int kEncodingChannels = 6;
inline constexpr int kEncodingSize = kMaxGridSize * kMaxGridSize * kEncodingChannels;
inline constexpr int kOutputSize = kNumNonterminals * kMaxArity;
inline constexpr std::uint32_t kCheckpointVersion = 1;
/// Floor on the per-step speaker terms of the neural pragmatic listener.
inline constexpr double kNeuralTermFloor = 1e-9;

struct TrainConfig {
  int batch_size = 8;
  int min_spec_len = 2;
  int max_spec_len = 25;
  int steps = 20000;
  int pool_size = 10000;
  int hidden = 256;
  double learning_rate = 1e-2;
  std::uint64_t seed = 0;

  void validate() const;
  friend bool operator==(const TrainConfig&, const TrainConfig&) = default;
};

/// Index of T[x][y][channel] in the flattened encoding.
constexpr int encoding_index(int x, int y, int channel) {
  return (x * kMaxGridSize + y) * kEncodingChannels + channel;
}

Eigen::VectorXd encode(const Spec& d);

struct NetGradients {
  Eigen::MatrixXd w1, w2, w3;
  Eigen::VectorXd b1, b2, b3;
};

class ListenerNet {
 public:
  ListenerNet() = default;
  /// Weights uniform in +-1/sqrt(fan_in), biases zero.
  ListenerNet(const std::array<int, kNumNonterminals>& arities, int hidden, std::uint64_t seed);

  const std::array<int, kNumNonterminals>& arities() const { return arities_; }
  int hidden() const { return static_cast<int>(b1.size()); }

  /// Column-per-sample probabilities (kOutputSize x batch); slots at or past
  /// a factor's arity are zero.
  Eigen::MatrixXd forward(const Eigen::MatrixXd& inputs) const;
  FactoredDistribution predict(const Spec& d) const;
  /// Unpacks one output column.
  FactoredDistribution to_factored(const Eigen::Ref<const Eigen::VectorXd>& column) const;

  /// Summed cross-entropy over the batch; fills `grad` when non-null.
  /// `targets` is kOutputSize x batch in the same layout as forward().
  double loss_and_gradient(const Eigen::MatrixXd& inputs, const Eigen::MatrixXd& targets, NetGradients* grad) const;
  void apply(const NetGradients& grad, double learning_rate);

  void save(const std::string& path) const;
  static ListenerNet load(const std::string& path);

  Eigen::MatrixXd w1, w2, w3;
  Eigen::VectorXd b1, b2, b3;
  TrainConfig config;

 private:
  Eigen::MatrixXd masked_softmax(Eigen::MatrixXd logits) const;

  std::array<int, kNumNonterminals> arities_{};
};

/// Packs a FactoredDistribution into a kOutputSize column.
Eigen::VectorXd target_column(const FactoredDistribution& q);

/// Summed per-factor cross-entropy H(target_i, predict(d)_i).
double loss(const ListenerNet& net, const Spec& d, const FactoredDistribution& target);

/// The programs training samples from; deterministic in cfg.seed.
std::vector<std::size_t> training_pool(const ProgramSpace& space, const TrainConfig& cfg);

/// Called after every step with the batch loss.
using TrainCallback = std::function<void(int step, double loss)>;

ListenerNet train(const ProgramSpace& space, const TrainConfig& cfg, const TrainCallback& on_step = {});

class NeuralLiteralModel final : public LiteralFactorModel {
 public:
  NeuralLiteralModel(const ProgramSpace& space, const ListenerNet& net) : space_(space), net_(net) {}
  FactoredDistribution literal(const Spec& d) const override { return net_.predict(d); }
  ExtensionFactors extensions(const Spec& prefix, std::span<const char> candidates) const override;

 private:
  const ProgramSpace& space_;
  const ListenerNet& net_;
};

FactoredDistribution neural_pragmatic(const ProgramSpace& space, const ListenerNet& net, const Spec& d,
                                      CandidateDomain domain = kDefaultCandidateDomain);

}  // namespace pragsynth

#endif  // PRAGSYNTH_NEURAL_HPP

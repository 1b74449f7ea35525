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

#include "pragsynth/neural.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <random>

#include "pragsynth/errors.hpp"
#include "pragsynth/speakers.hpp"

namespace pragsynth {

namespace {

constexpr char kMagic[4] = {'P', 'S', 'L', 'N'};

Eigen::MatrixXd uniform_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  const double bound = 1.0 / std::sqrt(static_cast<double>(cols));
  std::uniform_real_distribution<double> dist(-bound, bound);
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = dist(rng);
  return m;
}

template <typename T>
void put(std::ostream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <typename T>
T get(std::istream& is) {
  T v{};
  if (!is.read(reinterpret_cast<char*>(&v), sizeof v)) throw FormatError("truncated checkpoint");
  return v;
}

void put_matrix(std::ostream& os, const Eigen::MatrixXd& w, const Eigen::VectorXd& b) {
  put(os, static_cast<std::uint32_t>(w.rows()));
  put(os, static_cast<std::uint32_t>(w.cols()));
  for (Eigen::Index r = 0; r < w.rows(); ++r)
    for (Eigen::Index c = 0; c < w.cols(); ++c) put(os, w(r, c));
  for (Eigen::Index r = 0; r < b.size(); ++r) put(os, b(r));
}

void get_matrix(std::istream& is, Eigen::MatrixXd& w, Eigen::VectorXd& b) {
  const auto rows = get<std::uint32_t>(is);
  const auto cols = get<std::uint32_t>(is);
  if (rows == 0 || cols == 0 || rows > 1u << 16 || cols > 1u << 16) throw FormatError("bad layer shape");
  w.resize(rows, cols);
  b.resize(rows);
  for (Eigen::Index r = 0; r < w.rows(); ++r)
    for (Eigen::Index c = 0; c < w.cols(); ++c) w(r, c) = get<double>(is);
  for (Eigen::Index r = 0; r < b.size(); ++r) b(r) = get<double>(is);
}

}  // namespace

void TrainConfig::validate() const {
  if (batch_size < 1 || steps < 0 || pool_size < 1 || hidden < 1 || !(learning_rate > 0))
    throw std::invalid_argument("training parameters must be positive");
  if (min_spec_len < 1 || max_spec_len > kMaxGridSize * kMaxGridSize || min_spec_len > max_spec_len)
    throw std::invalid_argument("spec length range must lie within [1, 49]");
}

Eigen::VectorXd encode(const Spec& d) {
  Eigen::VectorXd t = Eigen::VectorXd::Zero(kEncodingSize);
  for (const auto& u : d) {
    t(encoding_index(u.x, u.y, static_cast<int>(u.object))) = 1.0;
    t(encoding_index(u.x, u.y, 3 + u.colour)) = 1.0;
  }
  return t;
}

ListenerNet::ListenerNet(const std::array<int, kNumNonterminals>& arities, int hidden, std::uint64_t seed)
    : arities_(arities) {
  for (int a : arities)
    if (a < 1 || a > kMaxArity) throw std::invalid_argument("arity outside [1, 7]");
  std::mt19937_64 rng(seed);
  w1 = uniform_matrix(hidden, kEncodingSize, rng);
  w2 = uniform_matrix(hidden, hidden, rng);
  w3 = uniform_matrix(kOutputSize, hidden, rng);
  b1 = Eigen::VectorXd::Zero(hidden);
  b2 = Eigen::VectorXd::Zero(hidden);
  b3 = Eigen::VectorXd::Zero(kOutputSize);
  config.hidden = hidden;
  config.seed = seed;
}

Eigen::MatrixXd ListenerNet::masked_softmax(Eigen::MatrixXd z) const {
  for (Eigen::Index c = 0; c < z.cols(); ++c) {
    for (int i = 0; i < kNumNonterminals; ++i) {
      const int a = arities_[static_cast<std::size_t>(i)];
      auto block = z.col(c).segment(i * kMaxArity, kMaxArity);
      const double mx = block.head(a).maxCoeff();
      block.head(a) = (block.head(a).array() - mx).exp();
      block.head(a) /= block.head(a).sum();
      block.tail(kMaxArity - a).setZero();
    }
  }
  return z;
}

Eigen::MatrixXd ListenerNet::forward(const Eigen::MatrixXd& inputs) const {
  const Eigen::MatrixXd h1 = ((w1 * inputs).colwise() + b1).cwiseMax(0.0);
  const Eigen::MatrixXd h2 = ((w2 * h1).colwise() + b2).cwiseMax(0.0);
  return masked_softmax((w3 * h2).colwise() + b3);
}

FactoredDistribution ListenerNet::to_factored(const Eigen::Ref<const Eigen::VectorXd>& column) const {
  FactoredDistribution q;
  for (int i = 0; i < kNumNonterminals; ++i) {
    const int a = arities_[static_cast<std::size_t>(i)];
    q[i].resize(static_cast<std::size_t>(a));
    for (int j = 0; j < a; ++j) q[i][static_cast<std::size_t>(j)] = column(i * kMaxArity + j);
  }
  return q;
}

FactoredDistribution ListenerNet::predict(const Spec& d) const {
  const Eigen::MatrixXd p = forward(encode(d));
  return to_factored(p.col(0));
}

double ListenerNet::loss_and_gradient(const Eigen::MatrixXd& inputs, const Eigen::MatrixXd& targets,
                                      NetGradients* grad) const {
  const Eigen::MatrixXd h1 = ((w1 * inputs).colwise() + b1).cwiseMax(0.0);
  const Eigen::MatrixXd h2 = ((w2 * h1).colwise() + b2).cwiseMax(0.0);
  const Eigen::MatrixXd z = (w3 * h2).colwise() + b3;

  Eigen::MatrixXd dz = Eigen::MatrixXd::Zero(z.rows(), z.cols());
  double total = 0;
  for (Eigen::Index c = 0; c < z.cols(); ++c) {
    for (int i = 0; i < kNumNonterminals; ++i) {
      const int a = arities_[static_cast<std::size_t>(i)];
      const auto zi = z.col(c).segment(i * kMaxArity, a);
      const auto ti = targets.col(c).segment(i * kMaxArity, a);
      const double mx = zi.maxCoeff();
      const double lse = mx + std::log((zi.array() - mx).exp().sum());
      const Eigen::VectorXd logp = zi.array() - lse;
      for (int j = 0; j < a; ++j)
        if (ti(j) > 0) total -= ti(j) * logp(j);
      dz.col(c).segment(i * kMaxArity, a) = logp.array().exp() * ti.sum() - ti.array();
    }
  }
  if (!grad) return total;

  grad->w3 = dz * h2.transpose();
  grad->b3 = dz.rowwise().sum();
  const Eigen::MatrixXd dh2 = (w3.transpose() * dz).cwiseProduct((h2.array() > 0).cast<double>().matrix());
  grad->w2 = dh2 * h1.transpose();
  grad->b2 = dh2.rowwise().sum();
  const Eigen::MatrixXd dh1 = (w2.transpose() * dh2).cwiseProduct((h1.array() > 0).cast<double>().matrix());
  grad->w1 = dh1 * inputs.transpose();
  grad->b1 = dh1.rowwise().sum();
  return total;
}

void ListenerNet::apply(const NetGradients& g, double lr) {
  w1 -= lr * g.w1;
  w2 -= lr * g.w2;
  w3 -= lr * g.w3;
  b1 -= lr * g.b1;
  b2 -= lr * g.b2;
  b3 -= lr * g.b3;
}

void ListenerNet::save(const std::string& path) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path);
  os.write(kMagic, sizeof kMagic);
  put(os, kCheckpointVersion);
  put(os, static_cast<std::int32_t>(config.batch_size));
  put(os, static_cast<std::int32_t>(config.min_spec_len));
  put(os, static_cast<std::int32_t>(config.max_spec_len));
  put(os, static_cast<std::int32_t>(config.steps));
  put(os, static_cast<std::int32_t>(config.pool_size));
  put(os, static_cast<std::int32_t>(config.hidden));
  put(os, config.learning_rate);
  put(os, config.seed);
  for (int a : arities_) put(os, static_cast<std::int32_t>(a));
  put(os, std::uint32_t{3});
  put_matrix(os, w1, b1);
  put_matrix(os, w2, b2);
  put_matrix(os, w3, b3);
  if (!os) throw std::runtime_error("failed writing " + path);
}

ListenerNet ListenerNet::load(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path);
  char magic[4];
  if (!is.read(magic, sizeof magic) || std::memcmp(magic, kMagic, sizeof magic) != 0)
    throw FormatError("not a listener checkpoint");
  if (get<std::uint32_t>(is) != kCheckpointVersion) throw FormatError("unsupported checkpoint version");
  ListenerNet net;
  net.config.batch_size = get<std::int32_t>(is);
  net.config.min_spec_len = get<std::int32_t>(is);
  net.config.max_spec_len = get<std::int32_t>(is);
  net.config.steps = get<std::int32_t>(is);
  net.config.pool_size = get<std::int32_t>(is);
  net.config.hidden = get<std::int32_t>(is);
  net.config.learning_rate = get<double>(is);
  net.config.seed = get<std::uint64_t>(is);
  for (auto& a : net.arities_) {
    a = get<std::int32_t>(is);
    if (a < 1 || a > kMaxArity) throw FormatError("bad arity in checkpoint");
  }
  if (get<std::uint32_t>(is) != 3) throw FormatError("expected three layers");
  get_matrix(is, net.w1, net.b1);
  get_matrix(is, net.w2, net.b2);
  get_matrix(is, net.w3, net.b3);
  if (net.w1.cols() != kEncodingSize || net.w2.cols() != net.w1.rows() || net.w3.cols() != net.w2.rows() ||
      net.w3.rows() != kOutputSize)
    throw FormatError("inconsistent layer shapes");
  return net;
}

Eigen::VectorXd target_column(const FactoredDistribution& q) {
  Eigen::VectorXd t = Eigen::VectorXd::Zero(kOutputSize);
  for (int i = 0; i < kNumNonterminals; ++i)
    for (std::size_t j = 0; j < q[i].size(); ++j) t(i * kMaxArity + static_cast<int>(j)) = q[i][j];
  return t;
}

double loss(const ListenerNet& net, const Spec& d, const FactoredDistribution& target) {
  return net.loss_and_gradient(encode(d), target_column(target), nullptr);
}

std::vector<std::size_t> training_pool(const ProgramSpace& space, const TrainConfig& cfg) {
  std::vector<std::size_t> idx(space.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t n = std::min(idx.size(), static_cast<std::size_t>(cfg.pool_size));
  for (std::size_t i = 0; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, idx.size() - 1);
    std::swap(idx[i], idx[pick(rng)]);
  }
  idx.resize(n);
  std::sort(idx.begin(), idx.end());
  return idx;
}

ListenerNet train(const ProgramSpace& space, const TrainConfig& cfg, const TrainCallback& on_step) {
  cfg.validate();
  ListenerNet net(space.arities(), cfg.hidden, cfg.seed);
  net.config = cfg;
  const auto pool = training_pool(space, cfg);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> pick_program(0, pool.size() - 1);
  std::uniform_int_distribution<int> pick_len(cfg.min_spec_len, cfg.max_spec_len);

  Eigen::MatrixXd inputs(kEncodingSize, cfg.batch_size);
  Eigen::MatrixXd targets(kOutputSize, cfg.batch_size);
  NetGradients grad;
  for (int step = 0; step < cfg.steps; ++step) {
    for (int b = 0; b < cfg.batch_size; ++b) {
      const Program& h = space.program(pool[pick_program(rng)]);
      SpeakerConfig sc;
      sc.max_len = pick_len(rng);
      sc.seed = rng();
      const Spec d = speak_literal(h, sc, space.grammar());
      inputs.col(b) = encode(d);
      targets.col(b) = target_column(factored_literal(space, d));
    }
    const double l = net.loss_and_gradient(inputs, targets, &grad);
    net.apply(grad, cfg.learning_rate);
    if (on_step) on_step(step, l);
  }
  return net;
}

ExtensionFactors NeuralLiteralModel::extensions(const Spec& prefix, std::span<const char> candidates) const {
  const int slots = space_.num_slots();
  const auto alphabet = static_cast<std::size_t>(space_.alphabet_size());
  ExtensionFactors out;
  out.num_slots = slots;
  out.values.assign(alphabet * static_cast<std::size_t>(slots), 0.0);
  out.defined.assign(alphabet, 0);

  std::vector<UtteranceId> ids;
  for (std::size_t u = 0; u < alphabet; ++u)
    if (candidates[u]) ids.push_back(static_cast<UtteranceId>(u));
  if (ids.empty()) return out;

  // The encoding is binary and sparse, so the first layer of prefix + u is
  // the prefix pre-activation plus at most two weight columns.
  const Eigen::VectorXd base = net_.w1 * encode(prefix) + net_.b1;
  Eigen::MatrixXd h1(base.size(), static_cast<Eigen::Index>(ids.size()));
  for (std::size_t k = 0; k < ids.size(); ++k) {
    const Utterance u = space_.utterance(ids[k]);
    Eigen::VectorXd a = base;
    if (!prefix.has_cell(u.x, u.y)) {
      a += net_.w1.col(encoding_index(u.x, u.y, static_cast<int>(u.object)));
      a += net_.w1.col(encoding_index(u.x, u.y, 3 + u.colour));
    }
    h1.col(static_cast<Eigen::Index>(k)) = a.cwiseMax(0.0);
  }
  const Eigen::MatrixXd h2 = ((net_.w2 * h1).colwise() + net_.b2).cwiseMax(0.0);
  const Eigen::MatrixXd logits = (net_.w3 * h2).colwise() + net_.b3;

  for (std::size_t k = 0; k < ids.size(); ++k) {
    const auto u = static_cast<std::size_t>(ids[k]);
    out.defined[u] = 1;
    for (int i = 0; i < kNumNonterminals; ++i) {
      const int a = space_.arities()[static_cast<std::size_t>(i)];
      const auto zi = logits.col(static_cast<Eigen::Index>(k)).segment(i * kMaxArity, a);
      const double mx = zi.maxCoeff();
      const Eigen::ArrayXd e = (zi.array() - mx).exp();
      const double z = e.sum();
      for (int j = 0; j < a; ++j)
        out.values[u * static_cast<std::size_t>(slots) + static_cast<std::size_t>(space_.slot(i, j))] = e(j) / z;
    }
  }
  return out;
}

FactoredDistribution neural_pragmatic(const ProgramSpace& space, const ListenerNet& net, const Spec& d,
                                      CandidateDomain domain) {
  if (net.arities() != space.arities()) throw std::invalid_argument("network was trained for another grammar");
  if (d.empty()) return FactoredDistribution::uniform(space.arities());
  return pragmatic_prefixes(space, NeuralLiteralModel(space, net), d, {domain, kNeuralTermFloor}).back();
}

}  // namespace pragsynth

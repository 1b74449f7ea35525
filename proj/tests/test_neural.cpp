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


#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "exact_model.hpp"
#include "helpers.hpp"
#include "pragsynth/errors.hpp"
#include "pragsynth/neural.hpp"

using namespace pragsynth;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("pragsynth_test_" + name)).string();
}

}  // namespace

TEST_CASE("encoding sets one shape and one colour channel per utterance") {
  Spec d;
  d.add(Utterance::make(2, 5, Object::kPig, 1));
  d.add(Utterance::make(3, 3, Object::kPebble, 0));
  const auto t = encode(d);
  CHECK(t.size() == 294);
  CHECK(t.sum() == 4.0);
  CHECK(t((2 * 7 + 5) * 6 + 1) == 1.0);
  CHECK(t((2 * 7 + 5) * 6 + 3 + 1) == 1.0);
  CHECK(t((3 * 7 + 3) * 6 + 2) == 1.0);
  CHECK(t((3 * 7 + 3) * 6 + 3) == 1.0);
  CHECK(encode(Spec{}).sum() == 0.0);
}

TEST_CASE("network outputs one distribution per nonterminal") {
  const auto& s = ProgramSpace::standard();
  const ListenerNet net(s.arities(), 16, 1);
  std::mt19937_64 rng(3);
  const auto q = net.predict(testing::random_true_spec(s, 10, 5, rng));
  CHECK(q.is_normalized());
  const Eigen::MatrixXd out = net.forward(Eigen::MatrixXd::Zero(kEncodingSize, 2));
  CHECK(out.rows() == 84);
  CHECK(out(0 * 7 + 1, 0) == 0.0);  // Program has one rule; padding stays zero
}

TEST_CASE("gradients match central finite differences") {
  const auto& s = ProgramSpace::standard();
  std::mt19937_64 rng(5);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    ListenerNet net(s.arities(), 8, seed);
    const int batch = 3;
    Eigen::MatrixXd x(kEncodingSize, batch), t(kOutputSize, batch);
    for (int b = 0; b < batch; ++b) {
      const Spec d = testing::random_true_spec(s, rng() % s.size(), 2 + rng() % 6, rng);
      x.col(b) = encode(d);
      t.col(b) = target_column(factored_literal(s, d));
    }
    NetGradients g;
    net.loss_and_gradient(x, t, &g);
    const double eps = 1e-5;
    double worst = 0;
    auto check = [&](Eigen::Ref<Eigen::MatrixXd> w, const Eigen::MatrixXd& gw) {
      for (int k = 0; k < 25; ++k) {
        const Eigen::Index r = static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(w.rows()));
        Eigen::Index c = static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(w.cols()));
        if (w.cols() == kEncodingSize) {
          // Only columns touched by the batch carry gradient; sample those.
          Eigen::Index tries = 0;
          while (x.row(c).sum() == 0 && tries++ < 1000) c = static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(w.cols()));
        }
        const double keep = w(r, c);
        w(r, c) = keep + eps;
        const double up = net.loss_and_gradient(x, t, nullptr);
        w(r, c) = keep - eps;
        const double down = net.loss_and_gradient(x, t, nullptr);
        w(r, c) = keep;
        const double numeric = (up - down) / (2 * eps);
        const double analytic = gw(r, c);
        const double scale = std::max({std::abs(numeric), std::abs(analytic), 1e-4});
        worst = std::max(worst, std::abs(numeric - analytic) / scale);
      }
    };
    check(net.w1, g.w1);
    check(net.w2, g.w2);
    check(net.w3, g.w3);
    check(net.b1, g.b1);
    check(net.b2, g.b2);
    check(net.b3, g.b3);
    CHECK(worst <= 1e-4);
  }
}

TEST_CASE("checkpoints round-trip and reject foreign files") {
  const auto& s = ProgramSpace::standard();
  ListenerNet net(s.arities(), 12, 9);
  net.config.steps = 77;
  const auto path = temp_path("ckpt.bin");
  net.save(path);
  const auto back = ListenerNet::load(path);
  CHECK(back.w1 == net.w1);
  CHECK(back.b3 == net.b3);
  CHECK(back.arities() == net.arities());
  CHECK(back.config == net.config);

  const auto junk = temp_path("junk.bin");
  std::ofstream(junk) << "not a model";
  CHECK_THROWS_AS(ListenerNet::load(junk), FormatError);
  std::filesystem::resize_file(path, 200);
  CHECK_THROWS(ListenerNet::load(path));
  CHECK_THROWS(ListenerNet::load(temp_path("missing.bin")));
  std::remove(path.c_str());
  std::remove(junk.c_str());
}

TEST_CASE("batched extensions equal predictions on each extended spec") {
  const auto& s = ProgramSpace::standard();
  const ListenerNet net(s.arities(), 16, 4);
  std::mt19937_64 rng(8);
  const Spec prefix = testing::random_true_spec(s, 500, 3, rng);
  std::vector<char> cand(static_cast<std::size_t>(s.alphabet_size()));
  for (UtteranceId u = 0; u < s.alphabet_size(); ++u) cand[static_cast<std::size_t>(u)] = is_candidate(s, u, prefix, kDefaultCandidateDomain);
  const auto ext = NeuralLiteralModel(s, net).extensions(prefix, cand);
  for (UtteranceId u = 0; u < s.alphabet_size(); u += 5) {
    if (!cand[static_cast<std::size_t>(u)]) {
      CHECK_FALSE(ext.defined[static_cast<std::size_t>(u)]);
      continue;
    }
    Spec d = prefix;
    d.add(s.utterance(u));
    const auto q = net.predict(d);
    for (int nt = 0; nt < kNumNonterminals; ++nt)
      for (int j = 0; j < s.arities()[static_cast<std::size_t>(nt)]; ++j)
        REQUIRE(std::abs(ext.at(u, s.slot(nt, j)) - q[nt][static_cast<std::size_t>(j)]) <= 1e-12);
  }
}

TEST_CASE("neural recursion with exact literal factors matches the enumerated pragmatic listener") {
  const auto& s = ProgramSpace::standard();
  const testing::ExactLiteralNet oracle_net(s);
  std::mt19937_64 rng(12);
  double worst = 0;
  for (int trial = 0; trial < 6; ++trial) {
    const Spec d = testing::random_true_spec(s, rng() % s.size(), 1 + rng() % 6, rng);
    const auto mine = pragmatic_prefixes(s, oracle_net, d, {kDefaultCandidateDomain, kNeuralTermFloor}).back();
    worst = std::max(worst, mine.max_abs_diff(factored_pragmatic(s, d)));
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("training is deterministic and lowers the loss") {
  const auto& s = ProgramSpace::standard();
  TrainConfig cfg;
  cfg.steps = 300;
  cfg.hidden = 32;
  cfg.pool_size = 500;
  cfg.seed = 5;
  double first = 0, last = 0;
  const auto a = train(s, cfg, [&](int step, double l) {
    if (step < 50) first += l;
    if (step >= 250) last += l;
  });
  CHECK(last < first);
  const auto b = train(s, cfg);
  CHECK(a.w2 == b.w2);
  CHECK(a.config == cfg);
  const auto pool = training_pool(s, cfg);
  CHECK(pool.size() == 500);
  CHECK(std::is_sorted(pool.begin(), pool.end()));
  CHECK(training_pool(s, cfg) == pool);
}

TEST_CASE("training configuration is validated") {
  TrainConfig cfg;
  cfg.batch_size = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.min_spec_len = 30;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("a network for another grammar is refused") {
  const auto& r = testing::reduced_space();
  const ListenerNet net(ProgramSpace::standard().arities(), 4, 1);
  CHECK_THROWS_AS(neural_pragmatic(r, net, Spec{}), std::invalid_argument);
}

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


// Acceptance runner: one PASS/FAIL line per headline property, followed by
// the measured numbers behind it. Exit status is non-zero if any fails.
//
//   acceptance [--full-training] [--seed S]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "exact_model.hpp"
#include "frozen.hpp"
#include "helpers.hpp"
#include "pragsynth/errors.hpp"
#include "pragsynth/eval.hpp"
#include "pragsynth/game.hpp"
#include "pragsynth/json_io.hpp"

using namespace pragsynth;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void run(const std::string& name, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s  %-28s %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.str().c_str(), secs);
  std::fflush(stdout);
  failures += !o.pass;
}

// ---------------------------------------------------------------------------

void marginal_equivalence(Outcome& o, std::uint64_t seed) {
  const auto& s = ProgramSpace::standard();
  std::mt19937_64 rng(seed);
  double worst = 0;
  int checks = 0;
  for (int t = 0; t < 50; ++t) {
    const Program target = s.program(rng() % s.size());
    for (auto kind : {SpeakerKind::kLiteral, SpeakerKind::kPragmatic}) {
      SpeakerConfig cfg;
      cfg.kind = kind;
      cfg.seed = rng();
      const Spec d = speak(s, target, cfg);
      for (std::size_t n : {1, 3, 7, 15}) {
        const Spec p = d.prefix(n);
        worst = std::max(worst, factored_literal(s, p).max_abs_diff(marginals(s, joint_literal(s, p))));
        ++checks;
      }
    }
  }
  o.detail << checks << " specs, max |factored - marginal| = " << worst;
  o.require(worst <= 1e-9, "difference above 1e-9");
}

void kl_property(Outcome& o, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  auto normalize = [](std::vector<double>& v) {
    double z = 0;
    for (double x : v) z += x;
    for (auto& x : v) x /= z;
  };
  int violations = 0;
  double min_gap = INFINITY;
  for (int t = 0; t < 100; ++t) {
    const int r = 1 + static_cast<int>(rng() % 7), c = 1 + static_cast<int>(rng() % 7);
    std::vector<double> p(static_cast<std::size_t>(r * c));
    for (auto& v : p) v = unif(rng) < 0.25 ? 0.0 : -std::log(unif(rng));
    if (std::all_of(p.begin(), p.end(), [](double v) { return v == 0; })) p[0] = 1;
    normalize(p);
    const auto [m1, m2] = table_marginals(p, r, c);
    const double best = forward_kl(p, r, c, m1, m2);
    for (int k = 0; k < 200; ++k) {
      std::vector<double> q1 = m1, q2 = m2;
      if (k % 2 == 0) {
        // Independent random factorization.
        for (auto& v : q1) v = -std::log(unif(rng));
        for (auto& v : q2) v = -std::log(unif(rng));
      } else {
        // Small perturbation of the marginals.
        const double eps = std::pow(10.0, -1.0 - 5.0 * unif(rng));
        for (auto& v : q1) v = std::max(0.0, v + eps * (unif(rng) - 0.5));
        for (auto& v : q2) v = std::max(0.0, v + eps * (unif(rng) - 0.5));
      }
      normalize(q1);
      normalize(q2);
      const double other = forward_kl(p, r, c, q1, q2);
      min_gap = std::min(min_gap, other - best);
      violations += best > other + 1e-12;
    }
  }
  o.detail << "20000 comparisons, violations = " << violations << ", smallest margin = " << min_gap;
  o.require(violations == 0, "a perturbed factorization had lower forward KL");
}

void reduced_oracle(Outcome& o, std::uint64_t seed) {
  const auto& s = testing::reduced_space();
  const oracle::Oracle orc(testing::reduced_grammar());
  double worst_joint = 0, worst_factored = 0;
  auto compare = [&](const Spec& d) {
    const auto j = joint_pragmatic(s, d);
    const auto jr = orc.joint_pragmatic(testing::to_oracle(d));
    for (std::size_t h = 0; h < s.size(); ++h) worst_joint = std::max(worst_joint, std::abs(j.probs[h] - jr[h]));
    const auto f = factored_pragmatic(s, d);
    const auto fr = orc.factored_pragmatic(testing::to_oracle(d));
    for (int nt = 0; nt < kNumNonterminals; ++nt)
      for (std::size_t k = 0; k < f[nt].size(); ++k)
        worst_factored = std::max(worst_factored, std::abs(f[nt][k] - fr[static_cast<std::size_t>(nt)][k]));
  };
  std::mt19937_64 rng(seed);
  int specs = 0;
  for (; specs < 40; ++specs) compare(testing::random_true_spec(s, rng() % s.size(), 1 + rng() % 5, rng));
  double worst_frozen = 0;
  for (const auto& fc : testing::frozen_cases()) {
    const Spec d = Spec::deduplicated(fc.spec);
    compare(d);
    ++specs;
    const auto j = joint_pragmatic(s, d);
    std::vector<double> expect(s.size(), 0.0);
    for (const auto& [h, p] : fc.joint_pragmatic) expect[h] = p;
    for (std::size_t h = 0; h < s.size(); ++h) worst_frozen = std::max(worst_frozen, std::abs(j.probs[h] - expect[h]));
    const auto f = factored_pragmatic(s, d);
    for (int nt = 0; nt < kNumNonterminals; ++nt)
      for (std::size_t k = 0; k < f[nt].size(); ++k)
        worst_frozen = std::max(worst_frozen, std::abs(f[nt][k] - fc.factored_pragmatic[static_cast<std::size_t>(nt)][k]));
  }
  o.detail << specs << " specs on 144 programs, max error joint = " << worst_joint << ", factored = " << worst_factored
           << ", frozen = " << worst_frozen;
  o.require(worst_joint <= 1e-9 && worst_factored <= 1e-9 && worst_frozen <= 1e-9, "error above 1e-9");
}

void search_properties(Outcome& o, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  // Found results are consistent and the budget caps the work.
  const auto& s = ProgramSpace::standard();
  ListenerContext ctx;
  int found = 0, exhausted = 0, inconsistent = 0, over_budget = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t h = rng() % s.size();
    SpeakerConfig cfg;
    cfg.kind = t % 2 ? SpeakerKind::kPragmatic : SpeakerKind::kLiteral;
    cfg.seed = rng();
    const Spec d = speak(s, s.program(h), cfg).prefix(1 + rng() % 15);
    const auto q = t % 4 < 2 ? factored_literal(s, d) : factored_pragmatic(s, d);
    const auto r = best_first_search(s.grammar(), d, q, ctx.search);
    if (const auto* f = std::get_if<Found>(&r)) {
      ++found;
      inconsistent += !consistent(f->program, d);
      over_budget += f->rank > 50;
    } else {
      ++exhausted;
      over_budget += std::get<Exhausted>(r).explored > 50;
    }
  }

  // Order on the reduced grammar against a full sort.
  const auto& rs = testing::reduced_space();
  int order_mismatch = 0;
  for (int t = 0; t < 50; ++t) {
    FactoredDistribution q;
    for (int i = 0; i < kNumNonterminals; ++i) {
      auto& f = q[i];
      f.resize(static_cast<std::size_t>(rs.arities()[static_cast<std::size_t>(i)]));
      double z = 0;
      for (auto& v : f) z += (v = (t % 3 == 0 && unif(rng) < 0.3) ? 0.0 : unif(rng));
      if (z == 0) z = (f[0] = 1.0);
      for (auto& v : f) v /= z;
    }
    std::vector<std::pair<double, Program>> scored;
    for (const auto& p : rs.programs()) {
      double sc = 0;
      bool zero = false;
      for (int i = 0; i < kNumNonterminals; ++i) {
        const double v = q[i][static_cast<std::size_t>(p[i])];
        zero = zero || v == 0;
        if (v > 0) sc += std::log(v);
      }
      if (!zero) scored.emplace_back(sc, p);
    }
    std::sort(scored.begin(), scored.end(),
              [](const auto& a, const auto& b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
    std::vector<Program> expect;
    for (const auto& [sc, p] : scored) expect.push_back(p);
    order_mismatch += ranked_stream(rs.grammar(), q, rs.size() + 1) != expect;
  }

  // Point masses.
  int point_fail = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t h = rng() % s.size();
    const Spec d = testing::random_true_spec(s, h, rng() % 10, rng);
    const auto r = best_first_search(s.grammar(), d, FactoredDistribution::point_mass(s.arities(), s.program(h)));
    const auto* f = std::get_if<Found>(&r);
    point_fail += !(f && f->rank == 1 && f->program == s.program(h));
  }

  // A spec whose first consistent program sits past rank 50 under lexicographic order.
  bool budget_exact = false;
  const auto uniform = FactoredDistribution::uniform(s.arities());
  for (std::size_t t = 60; t < s.size() && !budget_exact; ++t) {
    Spec d;
    for (auto u : s.utterances_of(t)) d.add(s.utterance(u));
    const std::size_t first = s.consistent_set(d).find_first();
    if (first < 50) continue;
    const auto r = best_first_search(s.grammar(), d, uniform, {50});
    budget_exact = std::holds_alternative<Exhausted>(r) && std::get<Exhausted>(r).explored == 50;
    const auto r2 = best_first_search(s.grammar(), d, uniform, {static_cast<int>(first) + 1});
    budget_exact = budget_exact && std::holds_alternative<Found>(r2);
  }

  o.detail << "found " << found << ", exhausted " << exhausted << ", inconsistent " << inconsistent << ", over budget "
           << over_budget << "; order mismatches " << order_mismatch << "/50; point-mass misses " << point_fail
           << "/100; budget boundary " << (budget_exact ? "exact" : "wrong");
  o.require(inconsistent == 0, "inconsistent Found");
  o.require(over_budget == 0, "budget exceeded");
  o.require(order_mismatch == 0, "stream order differs from brute force");
  o.require(point_fail == 0, "point mass not at rank 1");
  o.require(budget_exact, "budget boundary");
}

struct Series {
  std::map<int, double> acc;
};

void curves(Outcome& o, std::uint64_t seed) {
  const auto& s = ProgramSpace::standard();
  ListenerContext ctx;
  auto trials = generate_trials(s, SpeakerKind::kLiteral, 200, seed);
  const auto prag = generate_trials(s, SpeakerKind::kPragmatic, 200, seed + 1);
  trials.insert(trials.end(), prag.begin(), prag.end());
  const std::vector<ListenerId> ls = {ListenerId::kJ0, ListenerId::kJ1, ListenerId::kF0, ListenerId::kF1};
  const auto points = run_matrix(ctx, trials, ls, std::max(1u, std::thread::hardware_concurrency()));

  std::map<std::pair<ListenerId, TrialSource>, Series> series;
  for (const auto& p : points) series[{p.listener, p.speaker}].acc[p.n_utterances] = p.accuracy;
  auto at = [&](ListenerId l, TrialSource src, int n) {
    const auto& m = series[{l, src}].acc;
    // Past a trial's length accuracy stays at its final value.
    auto it = m.upper_bound(n);
    return it == m.begin() ? 0.0 : std::prev(it)->second;
  };
  const auto M0 = TrialSource::kMachineLiteral, M1 = TrialSource::kMachinePragmatic;

  // (a) literal listeners: informative specs solve, uninformative ones lag.
  bool a_high = true, a_lower = true;
  for (auto l : {ListenerId::kJ0, ListenerId::kF0}) {
    a_high = a_high && at(l, M1, 15) >= 0.90;
    for (int n = 1; n <= 15; ++n) a_lower = a_lower && at(l, M0, n) <= at(l, M1, n);
    a_lower = a_lower && at(l, M0, 15) <= at(l, M1, 15) - 0.20;
  }
  // (b) factored pragmatic tracks the exact pragmatic listener.
  double b_gap = 0;
  int b_at = 0;
  for (int n = 1; n <= 15; ++n) {
    const double g = std::abs(at(ListenerId::kF1, M1, n) - at(ListenerId::kJ1, M1, n));
    if (g > b_gap) b_gap = g, b_at = n;
  }
  // (c) monotone.
  bool monotone = true;
  for (const auto& [key, ser] : series) {
    double prev = 0;
    for (const auto& [n, a] : ser.acc) {
      monotone = monotone && a >= prev;
      prev = a;
    }
  }

  // Ceiling: share of targets whose full set of reveals leaves the literal
  // listener's tie-broken argmax on another rendering.
  int ceiling = 0;
  for (std::size_t h = 0; h < s.size(); ++h) {
    Bitset c = s.all();
    for (auto u : s.utterances_of(h)) c &= s.consistent_with(u);
    ceiling += s.same_rendering(c.find_first(), h);
  }

  o.detail << "\n      (a) >=90% by n=15: " << (a_high ? "yes" : "no") << "; M0 substantially lower: " << (a_lower ? "yes" : "no")
           << "\n      (b) max |F1-J1| on M1 = " << 100 * b_gap << " points at n=" << b_at
           << "\n      (c) monotone: " << (monotone ? "yes" : "no")
           << "\n      literal-listener ceiling with every cell revealed: " << 100.0 * ceiling / static_cast<double>(s.size())
           << "% of programs\n      accuracy at n = 1 3 5 7 10 15:";
  for (auto l : ls)
    for (auto src : {M0, M1}) {
      o.detail << "\n        " << listener_name(l) << " <- " << source_name(src) << ":";
      for (int n : {1, 3, 5, 7, 10, 15}) o.detail << ' ' << at(l, src, n);
    }
  o.detail << "\n     ";
  o.require(a_high, "(a) S_M1 literal accuracy below 90% at n=15");
  o.require(a_lower, "(a) S_M0 not substantially lower");
  o.require(b_gap <= 0.05, "(b) F1 and J1 differ by more than 5 points");
  o.require(monotone, "(c) non-monotone curve");
}

void neural_suite(Outcome& o, std::uint64_t seed, bool full) {
  const auto& s = ProgramSpace::standard();
  std::mt19937_64 rng(seed);

  // Gradient check on random small nets.
  double worst_grad = 0;
  for (int net_i = 0; net_i < 5; ++net_i) {
    ListenerNet net(s.arities(), 4 + static_cast<int>(rng() % 12), rng());
    const int batch = 1 + static_cast<int>(rng() % 4);
    Eigen::MatrixXd x(kEncodingSize, batch), t(kOutputSize, batch);
    for (int b = 0; b < batch; ++b) {
      const Spec d = testing::random_true_spec(s, rng() % s.size(), 2 + rng() % 10, rng);
      x.col(b) = encode(d);
      t.col(b) = target_column(factored_literal(s, d));
    }
    NetGradients g;
    net.loss_and_gradient(x, t, &g);
    std::vector<std::pair<Eigen::Ref<Eigen::MatrixXd>, const Eigen::MatrixXd*>> params = {
        {net.w1, &g.w1}, {net.w2, &g.w2}, {net.w3, &g.w3}};
    auto probe = [&](auto& w, const auto& gw, bool sparse_cols) {
      for (int k = 0; k < 30; ++k) {
        const auto r = static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(w.rows()));
        auto c = static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(w.cols()));
        for (int tries = 0; sparse_cols && x.row(c).sum() == 0 && tries < 1000; ++tries)
          c = static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(w.cols()));
        const double keep = w(r, c), eps = 1e-5;
        w(r, c) = keep + eps;
        const double up = net.loss_and_gradient(x, t, nullptr);
        w(r, c) = keep - eps;
        const double down = net.loss_and_gradient(x, t, nullptr);
        w(r, c) = keep;
        // The floor keeps round-off in the loss difference from dominating tiny gradients.
        const double num = (up - down) / (2 * eps);
        worst_grad = std::max(worst_grad, std::abs(num - gw(r, c)) / std::max({std::abs(num), std::abs(gw(r, c)), 1e-4}));
      }
    };
    probe(net.w1, g.w1, true);
    probe(net.w2, g.w2, false);
    probe(net.w3, g.w3, false);
    probe(net.b1, g.b1, false);
    probe(net.b2, g.b2, false);
    probe(net.b3, g.b3, false);
  }

  // Desk training against the uniform baseline on held-out programs.
  TrainConfig cfg;
  cfg.steps = full ? 150000 : 20000;
  cfg.seed = seed;
  const auto net = train(s, cfg);
  const auto pool = training_pool(s, cfg);
  std::vector<char> in_pool(s.size(), 0);
  for (auto h : pool) in_pool[h] = 1;
  std::array<double, kNumNonterminals> ce_net{}, ce_uniform{};
  std::uniform_int_distribution<int> len(cfg.min_spec_len, cfg.max_spec_len);
  int held = 0;
  while (held < 500) {
    const std::size_t h = rng() % s.size();
    if (in_pool[h]) continue;
    SpeakerConfig sc;
    sc.max_len = len(rng);
    sc.seed = rng();
    const Spec d = speak_literal(s.program(h), sc);
    const auto target = factored_literal(s, d);
    const auto q = net.predict(d);
    for (int i = 0; i < kNumNonterminals; ++i) {
      const auto a = static_cast<double>(s.arities()[static_cast<std::size_t>(i)]);
      for (std::size_t j = 0; j < target[i].size(); ++j) {
        if (target[i][j] == 0) continue;
        ce_net[static_cast<std::size_t>(i)] -= target[i][j] * std::log(q[i][j]);
        ce_uniform[static_cast<std::size_t>(i)] += target[i][j] * std::log(a);
      }
    }
    ++held;
  }
  bool beats = true;
  std::ostringstream per;
  for (int i = 0; i < kNumNonterminals; ++i) {
    const auto k = static_cast<std::size_t>(i);
    ce_net[k] /= held;
    ce_uniform[k] /= held;
    // Single-rule factors have zero cross-entropy under any model.
    const bool ok = s.arities()[k] == 1 ? ce_net[k] <= ce_uniform[k] + 1e-12 : ce_net[k] < ce_uniform[k];
    beats = beats && ok;
    per << ' ' << nonterminal_name(i) << '=' << ce_net[k] << '/' << ce_uniform[k];
  }

  // Learned-listener recursion fed exact factors.
  const testing::ExactLiteralNet oracle_net(s);
  double worst_oracle = 0;
  for (int t = 0; t < 20; ++t) {
    const std::size_t h = rng() % s.size();
    SpeakerConfig sc;
    sc.kind = t % 2 ? SpeakerKind::kPragmatic : SpeakerKind::kLiteral;
    sc.seed = rng();
    const Spec d = speak(s, s.program(h), sc).prefix(1 + rng() % 15);
    const auto mine = pragmatic_prefixes(s, oracle_net, d, {kDefaultCandidateDomain, kNeuralTermFloor}).back();
    worst_oracle = std::max(worst_oracle, mine.max_abs_diff(factored_pragmatic(s, d)));
  }

  o.detail << "grad rel err = " << worst_grad << "; " << cfg.steps << "-step CE net/uniform on " << held
           << " held-out specs:" << per.str() << "; oracle-net max diff = " << worst_oracle;
  o.require(worst_grad <= 1e-4, "gradient check");
  o.require(beats, "network does not beat uniform on every factor");
  o.require(worst_oracle <= 1e-6, "oracle-net recursion differs");
}

void service_contract(Outcome& o) {
  GameService svc(ListenerContext{}, GameConfig{}, 2024);
  int checks = 0;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    o.require(ok, what);
  };

  // Secrecy.
  const auto listener_view = svc.create_game({{"listener", "J1"}, {"seed", 31}});
  expect(listener_view.status == 201 && !listener_view.body.contains("target") && listener_view.body["v"] == 1,
         "create hides the target");
  const auto id = listener_view.body["id"].get<std::string>();
  const auto speaker_view = svc.create_game({{"listener", "J1"}, {"seed", 31}, {"role", "speaker"}});
  expect(speaker_view.body.contains("target"), "speaker role sees the target");
  const Program target = program_from_json(speaker_view.body["target"]);
  expect(!svc.summary(id).body.contains("target"), "summary hides the target");
  expect(svc.export_session(id).status == 409, "export refused while active");

  // Validation paths.
  expect(svc.reveal("ffff", {{"x", 1}, {"y", 1}}).status == 404, "unknown session reveal");
  expect(svc.give_up("ffff").status == 404, "unknown session giveup");
  expect(svc.summary("ffff").status == 404, "unknown session get");
  expect(svc.export_session("ffff").status == 404, "unknown session export");
  expect(svc.create_game({{"listener", "N0"}}).status == 409, "N0 without checkpoint");
  const Grid grid = render(target);
  int ex = -1, ey = -1;
  for (int y = 0; y < 7 && ex < 0; ++y)
    for (int x = 0; x < 7 && ex < 0; ++x)
      if (!grid.at(x, y).occupied) ex = x, ey = y;
  const auto empty = svc.reveal(id, {{"x", ex}, {"y", ey}});
  expect(empty.status == 422 && empty.body["error"] == "empty", "empty cell is 422 \"empty\"");
  const auto cells = valid_utterances(target);
  Spec revealed;
  const auto first = svc.reveal(id, {{"x", cells[0].x}, {"y", cells[0].y}});
  expect(first.status == 200 && first.body["guesses"].size() <= 5, "reveal");
  revealed.add(utterance_from_json(first.body["cell"]));
  if (!first.body["solved"].get<bool>()) {
    const auto dup = svc.reveal(id, {{"x", cells[0].x}, {"y", cells[0].y}});
    expect(dup.status == 422 && dup.body["error"] == "duplicate_cell", "duplicate cell is 422");
    const auto second = svc.reveal(id, {{"x", cells[1].x}, {"y", cells[1].y}});
    revealed.add(utterance_from_json(second.body["cell"]));
    if (!second.body["solved"].get<bool>()) expect(svc.give_up(id).status == 200, "give up");
  }
  expect(svc.give_up(id).status == 409, "give up twice is 409");
  expect(svc.reveal(id, {{"x", cells[2].x}, {"y", cells[2].y}}).status == 409, "reveal after the end is 409");

  // Export / ingest round trip.
  const auto exported = svc.export_session(id);
  expect(exported.status == 200, "export after the end");
  std::stringstream ss(exported.body.dump() + "\n");
  const auto trials = read_trials(ss);
  expect(trials.size() == 1 && trials[0].target == target && trials[0].utterances == revealed &&
             trials[0].source == TrialSource::kHumanPragmatic,
         "export ingests to the same trial");
  o.detail << checks << " contract checks";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  bool full_training = false;
  std::uint64_t seed = 20240601;
  app.add_flag("--full-training", full_training, "Train for 150,000 steps instead of 20,000");
  app.add_option("--seed", seed, "Base seed");
  CLI11_PARSE(app, argc, argv);

  run("marginal-equivalence", [&](Outcome& o) { marginal_equivalence(o, seed); });
  run("kl-property", [&](Outcome& o) { kl_property(o, seed + 1); });
  run("reduced-grammar-rsa-oracle", [&](Outcome& o) { reduced_oracle(o, seed + 2); });
  run("search", [&](Outcome& o) { search_properties(o, seed + 3); });
  run("communication-curves", [&](Outcome& o) { curves(o, seed + 4); });
  run("neural", [&](Outcome& o) { neural_suite(o, seed + 5, full_training); });
  run("service-contract", [&](Outcome& o) { service_contract(o); });
  std::printf("%d of 7 acceptance criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

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


// pragsynth command-line tool. Exit status: 0 ok, 1 runtime failure,
// 2 bad arguments or malformed input files.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "http_frontend.hpp"
#include "pragsynth/errors.hpp"
#include "pragsynth/eval.hpp"
#include "pragsynth/game.hpp"
#include "pragsynth/json_io.hpp"

// After Eigen: httplib pulls in <resolv.h>, whose _res macro clashes with it.
#include <CLI11.hpp>
#include <httplib.h>

namespace {

using namespace pragsynth;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  return os;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  try {
    return nlohmann::json::parse(is);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

std::unique_ptr<ListenerNet> load_net(const std::string& path) {
  if (path.empty()) return nullptr;
  return std::make_unique<ListenerNet>(ListenerNet::load(path));
}

int gen_specs(const std::string& speaker, int n, std::uint64_t seed, int max_len, const std::string& out) {
  const auto kind = speaker_from_name(speaker);
  if (!kind) throw UsageError("--speaker must be literal or pragmatic");
  const auto trials = generate_trials(ProgramSpace::standard(), *kind, n, seed, max_len);
  auto os = open_out(out);
  write_trials(os, trials);
  std::cerr << "wrote " << trials.size() << " trials to " << out << '\n';
  return 0;
}

int eval(const std::string& trials_path, const std::string& listeners_arg, int budget, const std::string& model,
         unsigned workers, const std::string& out) {
  std::vector<ListenerId> listeners;
  for (const auto& name : split(listeners_arg, ',')) {
    const auto id = listener_from_name(name);
    if (!id) throw UsageError("unknown listener '" + name + "'");
    listeners.push_back(*id);
  }
  if (listeners.empty()) throw UsageError("no listeners given");
  if (budget < 1) throw UsageError("--budget must be positive");
  const auto net = load_net(model);
  for (auto id : listeners)
    if (needs_network(id) && !net) throw UsageError(std::string(listener_name(id)) + " needs --model");
  const auto trials = ingest_trials(trials_path);
  ListenerContext ctx;
  ctx.net = net.get();
  ctx.search.budget = budget;
  const auto points = run_matrix(ctx, trials, listeners, workers);
  auto os = open_out(out);
  write_curves_csv(os, points);
  std::cerr << "evaluated " << trials.size() << " trials x " << listeners.size() << " listeners\n";
  return 0;
}

int marginals(const std::string& spec_path, const std::string& pair_arg, const std::string& out) {
  const auto names = split(pair_arg, ',');
  if (names.size() != 2) throw UsageError("--pair needs two nonterminal names");
  const auto a = nonterminal_from_name(names[0]);
  const auto b = nonterminal_from_name(names[1]);
  if (!a || !b) throw UsageError("unknown nonterminal in --pair");
  const auto j = read_json_file(spec_path);
  // Either a bare utterance array or an object with "utterances" (and maybe "target").
  Spec d;
  std::optional<Program> target;
  if (j.is_object()) {
    if (!j.contains("utterances")) throw FormatError(spec_path + ": missing field 'utterances'");
    d = spec_from_json(j.at("utterances"));
    if (j.contains("target")) target = program_from_json(j.at("target"));
  } else {
    d = spec_from_json(j);
  }
  const auto report = marginal_report(ListenerContext{}, d, {*a, *b}, target);
  auto os = open_out(out);
  os << to_json(report).dump(2) << '\n';
  return 0;
}

int train_cmd(TrainConfig cfg, const std::string& out) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  double running = 0;
  const auto net = train(ProgramSpace::standard(), cfg, [&](int step, double loss) {
    running += loss;
    if ((step + 1) % 1000 == 0) {
      const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      std::cerr << "step " << step + 1 << "  mean loss " << running / 1000 << "  " << secs << "s\n";
      running = 0;
    }
  });
  net.save(out);
  std::cerr << "saved " << out << '\n';
  return 0;
}

int enumerate_stats() {
  const auto& space = ProgramSpace::standard();
  const auto ar = space.arities();
  long long product = 1;
  std::cout << "arities:";
  for (int nt = 0; nt < kNumNonterminals; ++nt) {
    std::cout << ' ' << nonterminal_name(nt) << '=' << ar[static_cast<std::size_t>(nt)];
    product *= ar[static_cast<std::size_t>(nt)];
  }
  std::cout << "\nrule combinations: " << product << "\nvalid programs: " << space.size()
            << "\ndistinct renderings: " << space.rendering_class_count()
            << "\nutterance alphabet: " << space.alphabet_size() << '\n';
  return 0;
}

int serve(const std::string& host, int port, const std::string& model, const std::string& journal,
          int idle_minutes, int top_k) {
  if (top_k < 1) throw UsageError("--top-k must be positive");
  const auto net = load_net(model);
  ListenerContext ctx;
  ctx.net = net.get();
  GameConfig cfg;
  cfg.default_top_k = static_cast<std::size_t>(top_k);
  cfg.idle_timeout = std::chrono::minutes(idle_minutes);
  cfg.journal_path = journal;
  GameService service(ctx, cfg);
  httplib::Server server;
  install_routes(server, service);
  std::cerr << "listening on " << host << ':' << port << '\n';
  if (!server.listen(host, port)) throw std::runtime_error("cannot listen on " + host + ":" + std::to_string(port));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pragmatic program synthesis over the grid DSL"};
  app.require_subcommand(1);

  std::string speaker = "literal", out, trials, listeners = "J0,J1,F0,F1", model, spec, pair, host = "127.0.0.1",
              journal;
  int n = 200, max_len = 15, budget = 50, port = 8080, idle = 120, top_k = 5;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t seed = 0;
  bool stats = false;
  TrainConfig tcfg;

  auto* gen = app.add_subcommand("gen-specs", "Generate machine speaker trials");
  gen->add_option("--speaker", speaker, "literal or pragmatic")->required();
  gen->add_option("--n", n, "Number of trials")->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--max-len", max_len, "Utterances per trial")->check(CLI::PositiveNumber);
  gen->add_option("--out", out, "Output JSONL")->required();

  auto* ev = app.add_subcommand("eval", "Accuracy curves for listeners over trials");
  ev->add_option("--trials", trials, "Trials JSONL")->required();
  ev->add_option("--listeners", listeners, "Comma-separated: J0,J1,F0,F1,N0,N1");
  ev->add_option("--budget", budget, "Search budget");
  ev->add_option("--model", model, "Network checkpoint for N0/N1");
  ev->add_option("--workers", workers, "Worker threads");
  ev->add_option("--out", out, "Output CSV")->required();

  auto* mg = app.add_subcommand("marginals", "Two-nonterminal marginal tables");
  mg->add_option("--spec", spec, "Spec JSON")->required();
  mg->add_option("--pair", pair, "Two nonterminals, e.g. Left,Right")->required();
  mg->add_option("--out", out, "Output JSON")->required();

  auto* tr = app.add_subcommand("train", "Train the neural literal listener");
  tr->add_option("--steps", tcfg.steps, "SGD steps");
  tr->add_option("--seed", tcfg.seed, "Random seed");
  tr->add_option("--batch", tcfg.batch_size, "Batch size");
  tr->add_option("--hidden", tcfg.hidden, "Hidden width");
  tr->add_option("--lr", tcfg.learning_rate, "Learning rate");
  tr->add_option("--pool", tcfg.pool_size, "Training target pool size");
  tr->add_option("--out", out, "Checkpoint path")->required();

  auto* en = app.add_subcommand("enumerate", "Program space statistics");
  en->add_flag("--stats", stats, "Print counts");

  auto* sv = app.add_subcommand("serve", "Serve live reference games over HTTP");
  sv->add_option("--host", host, "Bind address");
  sv->add_option("--port", port, "Port");
  sv->add_option("--model", model, "Network checkpoint enabling N0/N1");
  sv->add_option("--journal", journal, "Session journal (JSONL)");
  sv->add_option("--idle-minutes", idle, "Idle session expiry")->check(CLI::PositiveNumber);
  sv->add_option("--top-k", top_k, "Default number of guesses");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return gen_specs(speaker, n, seed, max_len, out);
    if (*ev) return eval(trials, listeners, budget, model, workers, out);
    if (*mg) return marginals(spec, pair, out);
    if (*tr) return train_cmd(tcfg, out);
    if (*en) return enumerate_stats();
    if (*sv) return serve(host, port, model, journal, idle, top_k);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

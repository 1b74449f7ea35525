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

#include "pragsynth/game.hpp"

#include <cstdio>

#include "pragsynth/errors.hpp"
#include "pragsynth/json_io.hpp"

namespace pragsynth {

namespace {

using nlohmann::json;

ServiceResponse error(int status, std::string code, std::string message) {
  return {status, {{"v", kApiVersion}, {"error", std::move(code)}, {"message", std::move(message)}}};
}

ServiceResponse not_found(const std::string& id) { return error(404, "not_found", "no session '" + id + "'"); }

ServiceResponse not_active(SessionStatus s) {
  return error(409, "not_active", "session is " + std::string(status_name(s)));
}

std::int64_t unix_now() {
  return std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch()).count();
}

std::optional<int> int_field(const json& body, const char* key) {
  if (!body.contains(key) || !body.at(key).is_number_integer()) return std::nullopt;
  return body.at(key).get<int>();
}

/// Reads an optional top_k; returns false if present but malformed.
bool read_top_k(const json& body, const GameConfig& cfg, std::size_t& k) {
  k = cfg.default_top_k;
  if (!body.contains("top_k")) return true;
  const auto& v = body.at("top_k");
  if (!v.is_number_integer() || v.get<long long>() < 1) return false;
  k = std::min(cfg.max_top_k, static_cast<std::size_t>(v.get<long long>()));
  return true;
}

}  // namespace

std::string_view status_name(SessionStatus s) {
  switch (s) {
    case SessionStatus::kActive: return "active";
    case SessionStatus::kSolved: return "solved";
    case SessionStatus::kGivenUp: return "given_up";
  }
  return "unknown";
}

GameService::GameService(ListenerContext ctx, GameConfig cfg, std::uint64_t seed)
    : ctx_(ctx), cfg_(std::move(cfg)), rng_(seed) {
  if (cfg_.journal_path.empty()) return;
  replay_journal();
  journal_.open(cfg_.journal_path, std::ios::app);
  if (!journal_) throw std::runtime_error("cannot open journal " + cfg_.journal_path);
}

std::shared_ptr<GameService::Session> GameService::find(const std::string& id) const {
  std::lock_guard lock(mu_);
  const auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::string GameService::fresh_id() {
  // Caller holds mu_.
  for (;;) {
    char buf[33];
    std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(rng_()),
                  static_cast<unsigned long long>(rng_()));
    if (!sessions_.contains(buf)) return buf;
  }
}

void GameService::journal(const json& event) {
  if (!journal_.is_open()) return;
  std::lock_guard lock(mu_);
  journal_ << event.dump() << '\n';
  journal_.flush();
}

void GameService::replay_journal() {
  std::ifstream is(cfg_.journal_path);
  if (!is) return;  // first run
  const ProgramSpace& space = *ctx_.space;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const json e = json::parse(line);
      const std::string op = e.at("op").get<std::string>();
      const std::string id = e.at("id").get<std::string>();
      if (op == "create") {
        auto s = std::make_shared<Session>();
        s->id = id;
        s->target = program_from_json(e.at("target"), space.grammar());
        s->target_index = space.index_of(s->target).value();
        s->listener = listener_from_name(e.at("listener").get<std::string>()).value();
        s->created_at = e.at("created_at").get<std::int64_t>();
        s->last_active = Clock::now();
        sessions_[id] = std::move(s);
        continue;
      }
      const auto it = sessions_.find(id);
      if (it == sessions_.end()) continue;  // expired before the restart
      Session& s = *it->second;
      if (op == "reveal") {
        s.revealed.add(utterance_from_json(e.at("utterance"), space.grammar()));
        if (e.at("solved").get<bool>()) s.status = SessionStatus::kSolved;
      } else if (op == "giveup") {
        s.status = SessionStatus::kGivenUp;
      }
    } catch (const std::exception& ex) {
      throw FormatError(std::string("journal: ") + ex.what(), lineno);
    }
  }
}

json GameService::guess_json(const std::vector<Guess>& gs) const {
  json out = json::array();
  for (const auto& g : gs)
    out.push_back({{"program", to_json(g.program)}, {"grid", to_json(ctx_.space->grid(g.index))}, {"score", g.score}});
  return out;
}

json GameService::summary_json(const Session& s) const {
  json j = {{"v", kApiVersion},
            {"id", s.id},
            {"grid_size", ctx_.space->grammar().grid_size},
            {"listener", std::string(listener_name(s.listener))},
            {"status", std::string(status_name(s.status))},
            {"created_at", s.created_at},
            {"revealed", to_json(s.revealed)}};
  if (s.status != SessionStatus::kActive) {
    j["target"] = to_json(s.target);
    j["grid"] = to_json(ctx_.space->grid(s.target_index));
  }
  return j;
}

ServiceResponse GameService::create_game(const json& body) {
  if (!body.is_object()) return error(400, "bad_request", "body must be a JSON object");
  if (!body.contains("listener") || !body.at("listener").is_string())
    return error(400, "bad_request", "missing listener");
  const auto listener = listener_from_name(body.at("listener").get<std::string>());
  if (!listener) return error(400, "unknown_listener", "unknown listener '" + body.at("listener").get<std::string>() + "'");
  if (needs_network(*listener) && !ctx_.net)
    return error(409, "network_unavailable", "listener " + std::string(listener_name(*listener)) +
                                                 " needs a trained network checkpoint");
  std::string role = "listener";
  if (body.contains("role")) {
    if (!body.at("role").is_string()) return error(400, "bad_request", "role must be a string");
    role = body.at("role").get<std::string>();
    if (role != "speaker" && role != "listener") return error(400, "bad_request", "role must be speaker or listener");
  }
  if (body.contains("seed") && !body.at("seed").is_number_unsigned() && !body.at("seed").is_number_integer())
    return error(400, "bad_request", "seed must be an integer");

  auto s = std::make_shared<Session>();
  s->listener = *listener;
  s->created_at = unix_now();
  s->last_active = Clock::now();
  {
    std::lock_guard lock(mu_);
    std::uint64_t seed = body.contains("seed") ? body.at("seed").get<std::uint64_t>() : rng_();
    std::mt19937_64 pick_rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, ctx_.space->size() - 1);
    s->target_index = pick(pick_rng);
    s->target = ctx_.space->program(s->target_index);
    s->id = fresh_id();
    sessions_[s->id] = s;
  }
  journal({{"op", "create"},
           {"id", s->id},
           {"listener", std::string(listener_name(s->listener))},
           {"target", to_json(s->target)},
           {"created_at", s->created_at}});

  json j = {{"v", kApiVersion},
            {"id", s->id},
            {"grid_size", ctx_.space->grammar().grid_size},
            {"listener", std::string(listener_name(s->listener))},
            {"status", "active"},
            {"created_at", s->created_at}};
  if (role == "speaker") {
    j["target"] = to_json(s->target);
    j["grid"] = to_json(ctx_.space->grid(s->target_index));
  }
  return {201, std::move(j)};
}

ServiceResponse GameService::reveal(const std::string& id, const json& body) {
  const auto sp = find(id);
  if (!sp) return not_found(id);
  Session& s = *sp;
  std::lock_guard lock(s.mu);
  s.last_active = Clock::now();
  if (s.status != SessionStatus::kActive) return not_active(s.status);
  if (!body.is_object()) return error(400, "bad_request", "body must be a JSON object");
  const auto x = int_field(body, "x");
  const auto y = int_field(body, "y");
  if (!x || !y) return error(400, "bad_request", "x and y must be integers");
  std::size_t k = 0;
  if (!read_top_k(body, cfg_, k)) return error(400, "bad_request", "top_k must be a positive integer");
  const int size = ctx_.space->grammar().grid_size;
  if (*x < 0 || *x >= size || *y < 0 || *y >= size)
    return error(422, "out_of_grid", "cell is outside the grid");
  if (s.revealed.has_cell(*x, *y)) return error(422, "duplicate_cell", "cell already revealed");
  const Cell& cell = ctx_.space->grid(s.target_index).at(*x, *y);
  if (!cell.occupied) return error(422, "empty", "cell is empty and cannot be revealed");

  const Utterance u = Utterance::make(*x, *y, cell.object, cell.colour);
  s.revealed.add(u);
  std::vector<Guess> gs;
  try {
    gs = guesses(ctx_, s.listener, s.revealed, k);
  } catch (const NetworkUnavailable& e) {
    return error(409, "network_unavailable", e.what());
  } catch (const NoConsistentProgram&) {
    // The mean-field posterior can rule out every rule of some factor; the
    // listener then has no guess rather than failing the request.
  }
  const bool solved = !gs.empty() && ctx_.space->same_rendering(gs.front().index, s.target_index);
  if (solved) s.status = SessionStatus::kSolved;
  journal({{"op", "reveal"}, {"id", s.id}, {"utterance", to_json(u)}, {"solved", solved}});

  json j = {{"v", kApiVersion},
            {"cell", to_json(u)},
            {"guesses", guess_json(gs)},
            {"solved", solved},
            {"status", std::string(status_name(s.status))},
            {"n_revealed", s.revealed.size()}};
  if (solved) {
    j["target"] = to_json(s.target);
    j["grid"] = to_json(ctx_.space->grid(s.target_index));
  }
  return {200, std::move(j)};
}

ServiceResponse GameService::give_up(const std::string& id) {
  const auto sp = find(id);
  if (!sp) return not_found(id);
  Session& s = *sp;
  std::lock_guard lock(s.mu);
  s.last_active = Clock::now();
  if (s.status != SessionStatus::kActive) return not_active(s.status);
  s.status = SessionStatus::kGivenUp;
  journal({{"op", "giveup"}, {"id", s.id}});
  return {200,
          {{"v", kApiVersion},
           {"status", std::string(status_name(s.status))},
           {"target", to_json(s.target)},
           {"grid", to_json(ctx_.space->grid(s.target_index))}}};
}

ServiceResponse GameService::summary(const std::string& id) {
  const auto sp = find(id);
  if (!sp) return not_found(id);
  std::lock_guard lock(sp->mu);
  sp->last_active = Clock::now();
  return {200, summary_json(*sp)};
}

ServiceResponse GameService::export_session(const std::string& id) {
  const auto sp = find(id);
  if (!sp) return not_found(id);
  Session& s = *sp;
  std::lock_guard lock(s.mu);
  s.last_active = Clock::now();
  // The record contains the target, so it is only released once the game is over.
  if (s.status == SessionStatus::kActive) return not_active(s.status);
  Trial t{s.target, s.revealed,
          is_pragmatic(s.listener) ? TrialSource::kHumanPragmatic : TrialSource::kHumanLiteral};
  json j = to_json(t);
  j["v"] = kApiVersion;
  return {200, std::move(j)};
}

ServiceResponse GameService::health() const {
  return {200, {{"v", kApiVersion}, {"status", "ok"}, {"sessions", session_count()}, {"network", ctx_.net != nullptr}}};
}

std::size_t GameService::expire_idle(Clock::time_point now) {
  std::lock_guard lock(mu_);
  std::size_t removed = 0;
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    std::unique_lock slock(it->second->mu, std::try_to_lock);
    // A session busy with a request is by definition not idle.
    if (slock.owns_lock() && now - it->second->last_active > cfg_.idle_timeout) {
      slock.unlock();
      it = sessions_.erase(it);
      ++removed;
    } else {
      ++it;
    }
  }
  return removed;
}

std::size_t GameService::session_count() const {
  std::lock_guard lock(mu_);
  return sessions_.size();
}

}  // namespace pragsynth

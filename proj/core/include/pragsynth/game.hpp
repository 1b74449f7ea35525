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

// Live reference games. The service holds a secret target per session; a
// human speaker reveals cells one at a time and gets back the listener's
// current guesses. Every method maps to one HTTP route and returns the
// status code and JSON body to send; all bodies carry "v": 1.
//
//   POST /games                {listener, seed?, role?, top_k?}  -> 201
//   POST /games/{id}/reveals   {x, y, top_k?}                    -> 200
//   POST /games/{id}/giveup                                      -> 200
//   GET  /games/{id}                                             -> 200
//   GET  /games/{id}/export                                      -> 200 (trial record)
//   GET  /healthz                                                -> 200
//
// Errors: 400 malformed request or unknown listener, 404 unknown session,
// 409 session not active or network not loaded, 422 duplicate / empty /
// out-of-grid cell. Error bodies are {"v": 1, "error": code, "message": text}.
//
// The target appears in a response only once the session is solved or given
// up, or on creation with "role": "speaker" (the speaker view needs it).

#ifndef PRAGSYNTH_GAME_HPP
#define PRAGSYNTH_GAME_HPP

#include <chrono>
#include <cstdint>
#include <fstream>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "pragsynth/eval.hpp"
#include "pragsynth/listeners.hpp"

namespace pragsynth {

inline constexpr int kApiVersion = 1;

struct GameConfig {
  std::size_t default_top_k = 5;
  std::size_t max_top_k = 50;
  std::chrono::seconds idle_timeout{std::chrono::hours(2)};
  /// Append-only session journal; empty disables it. Existing journal
  /// entries are replayed on construction.
  std::string journal_path;
};

struct ServiceResponse {
  int status = 200;
  nlohmann::json body;
};

enum class SessionStatus { kActive, kSolved, kGivenUp };
std::string_view status_name(SessionStatus s);

class GameService {
 public:
  using Clock = std::chrono::steady_clock;

  /// `ctx.net` may be null, in which case N0/N1 games are refused with 409.
  explicit GameService(ListenerContext ctx, GameConfig cfg = {}, std::uint64_t seed = std::random_device{}());

  ServiceResponse create_game(const nlohmann::json& body);
  ServiceResponse reveal(const std::string& id, const nlohmann::json& body);
  ServiceResponse give_up(const std::string& id);
  ServiceResponse summary(const std::string& id);
  ServiceResponse export_session(const std::string& id);
  ServiceResponse health() const;

  /// Drops sessions idle for longer than the configured timeout; returns how many.
  std::size_t expire_idle(Clock::time_point now = Clock::now());
  std::size_t session_count() const;

 private:
  struct Session {
    std::string id;
    Program target;
    std::size_t target_index = 0;
    ListenerId listener = ListenerId::kJ0;
    Spec revealed;
    SessionStatus status = SessionStatus::kActive;
    std::int64_t created_at = 0;  // unix seconds
    Clock::time_point last_active;
    std::mutex mu;
  };

  std::shared_ptr<Session> find(const std::string& id) const;
  std::string fresh_id();
  nlohmann::json summary_json(const Session& s) const;
  nlohmann::json guess_json(const std::vector<Guess>& gs) const;
  void journal(const nlohmann::json& event);
  void replay_journal();

  ListenerContext ctx_;
  GameConfig cfg_;
  mutable std::mutex mu_;  // guards sessions_, rng_ and the journal stream
  std::unordered_map<std::string, std::shared_ptr<Session>> sessions_;
  std::mt19937_64 rng_;
  std::ofstream journal_;
};

}  // namespace pragsynth

#endif  // PRAGSYNTH_GAME_HPP

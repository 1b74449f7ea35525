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


#include "http_frontend.hpp"

#include <httplib.h>

namespace pragsynth {

namespace {

void send(httplib::Response& res, const ServiceResponse& r) {
  res.status = r.status;
  res.set_content(r.body.dump(), "application/json");
}

/// Empty bodies read as {}; anything unparsable is a 400.
bool parse_body(const httplib::Request& req, httplib::Response& res, nlohmann::json& out) {
  if (req.body.find_first_not_of(" \t\r\n") == std::string::npos) {
    out = nlohmann::json::object();
    return true;
  }
  try {
    out = nlohmann::json::parse(req.body);
    return true;
  } catch (const nlohmann::json::parse_error& e) {
    send(res, {400, {{"v", kApiVersion}, {"error", "bad_request"}, {"message", e.what()}}});
    return false;
  }
}

}  // namespace

void install_routes(httplib::Server& server, GameService& service) {
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  server.set_pre_routing_handler([&service](const httplib::Request&, httplib::Response&) {
    service.expire_idle();
    return httplib::Server::HandlerResponse::Unhandled;
  });
  server.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string what = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    send(res, {500, {{"v", kApiVersion}, {"error", "internal"}, {"message", what}}});
  });
  server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (!res.body.empty()) return;
    send(res, {res.status, {{"v", kApiVersion}, {"error", "not_found"}, {"message", "no such route"}}});
  });
  server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  server.Get("/healthz", [&service](const httplib::Request&, httplib::Response& res) { send(res, service.health()); });
  server.Post("/games", [&service](const httplib::Request& req, httplib::Response& res) {
    nlohmann::json body;
    if (parse_body(req, res, body)) send(res, service.create_game(body));
  });
  server.Post(R"(/games/([0-9a-f]+)/reveals)", [&service](const httplib::Request& req, httplib::Response& res) {
    nlohmann::json body;
    if (parse_body(req, res, body)) send(res, service.reveal(req.matches[1], body));
  });
  server.Post(R"(/games/([0-9a-f]+)/giveup)", [&service](const httplib::Request& req, httplib::Response& res) {
    send(res, service.give_up(req.matches[1]));
  });
  server.Get(R"(/games/([0-9a-f]+)/export)", [&service](const httplib::Request& req, httplib::Response& res) {
    send(res, service.export_session(req.matches[1]));
  });
  server.Get(R"(/games/([0-9a-f]+))", [&service](const httplib::Request& req, httplib::Response& res) {
    send(res, service.summary(req.matches[1]));
  });
}

}  // namespace pragsynth

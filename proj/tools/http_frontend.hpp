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


// Binds GameService to cpp-httplib routes.

#ifndef PRAGSYNTH_TOOLS_HTTP_FRONTEND_HPP
#define PRAGSYNTH_TOOLS_HTTP_FRONTEND_HPP

#include "pragsynth/game.hpp"

namespace httplib {
class Server;
}

namespace pragsynth {

/// Installs the game routes plus permissive CORS headers for a browser UI.
/// Idle sessions are swept before every request.
void install_routes(httplib::Server& server, GameService& service);

}  // namespace pragsynth

#endif  // PRAGSYNTH_TOOLS_HTTP_FRONTEND_HPP

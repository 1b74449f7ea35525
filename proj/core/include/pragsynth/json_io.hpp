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

// Wire forms:
//   Program    [12 choice indices]
//   Utterance  {"x": 0-6, "y": 0-6, "object": "chicken"|"pig"|"pebble", "colour": 0-2}
//   Spec       [Utterance, ...]
//   Grid       [[cell, ...] x rows], cell = null | {"object": ..., "colour": ...}

#ifndef PRAGSYNTH_JSON_IO_HPP
#define PRAGSYNTH_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "pragsynth/dsl.hpp"

namespace pragsynth {

nlohmann::json to_json(const Program& p);
nlohmann::json to_json(const Utterance& u);
nlohmann::json to_json(const Spec& d);
nlohmann::json to_json(const Grid& g);

/// These throw FormatError on malformed input.
Program program_from_json(const nlohmann::json& j, const Grammar& g = Grammar::standard());
Utterance utterance_from_json(const nlohmann::json& j, const Grammar& g = Grammar::standard());
/// Duplicate cells keep their first occurrence.
Spec spec_from_json(const nlohmann::json& j, const Grammar& g = Grammar::standard());

}  // namespace pragsynth

#endif  // PRAGSYNTH_JSON_IO_HPP

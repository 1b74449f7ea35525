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

#include "pragsynth/json_io.hpp"

#include "pragsynth/errors.hpp"

namespace pragsynth {

namespace {

int int_field(const nlohmann::json& j, const char* key, int lo, int hi) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) throw FormatError(std::string("missing integer field '") + key + "'");
  const auto v = j.at(key).get<long long>();
  if (v < lo || v > hi) throw FormatError(std::string("field '") + key + "' out of range");
  return static_cast<int>(v);
}

}  // namespace

nlohmann::json to_json(const Program& p) {
  nlohmann::json j = nlohmann::json::array();
  for (auto c : p.choices) j.push_back(static_cast<int>(c));
  return j;
}

nlohmann::json to_json(const Utterance& u) {
  return {{"x", u.x}, {"y", u.y}, {"object", std::string(object_name(u.object))}, {"colour", u.colour}};
}

nlohmann::json to_json(const Spec& d) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& u : d) j.push_back(to_json(u));
  return j;
}

nlohmann::json to_json(const Grid& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (int y = 0; y < g.size(); ++y) {
    nlohmann::json row = nlohmann::json::array();
    for (int x = 0; x < g.size(); ++x) {
      const Cell& c = g.at(x, y);
      if (!c.occupied)
        row.push_back(nullptr);
      else
        row.push_back({{"object", std::string(object_name(c.object))}, {"colour", c.colour}});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Program program_from_json(const nlohmann::json& j, const Grammar& g) {
  if (!j.is_array() || j.size() != kNumNonterminals) throw FormatError("program must be an array of 12 integers");
  const auto ar = g.arities();
  Program p;
  for (int i = 0; i < kNumNonterminals; ++i) {
    const auto& v = j[static_cast<std::size_t>(i)];
    if (!v.is_number_integer()) throw FormatError("program choices must be integers");
    const auto c = v.get<long long>();
    if (c < 0 || c >= ar[static_cast<std::size_t>(i)])
      throw FormatError("choice for " + std::string(nonterminal_name(i)) + " out of range");
    p.choices[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(c);
  }
  if (!g.is_valid(p)) throw FormatError("program violates the box constraints");
  return p;
}

Utterance utterance_from_json(const nlohmann::json& j, const Grammar& g) {
  if (!j.is_object()) throw FormatError("utterance must be an object");
  const int x = int_field(j, "x", 0, g.grid_size - 1);
  const int y = int_field(j, "y", 0, g.grid_size - 1);
  if (!j.contains("object") || !j.at("object").is_string()) throw FormatError("missing field 'object'");
  const auto o = object_from_name(j.at("object").get<std::string>());
  if (!o) throw FormatError("unknown object '" + j.at("object").get<std::string>() + "'");
  // Pebbles are colourless; a missing colour is accepted for them.
  const int colour = (*o == Object::kPebble && !j.contains("colour")) ? 0 : int_field(j, "colour", 0, kNumColours - 1);
  return Utterance::make(x, y, *o, colour);
}

Spec spec_from_json(const nlohmann::json& j, const Grammar& g) {
  if (!j.is_array()) throw FormatError("spec must be an array of utterances");
  Spec d;
  for (const auto& u : j) d.add(utterance_from_json(u, g));
  return d;
}

}  // namespace pragsynth

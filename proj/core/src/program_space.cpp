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

#include "pragsynth/program_space.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pragsynth {

namespace {

int utterance_code(Object o, int colour) {
  return o == Object::kPebble ? 6 : static_cast<int>(o) * kNumColours + colour;
}

std::vector<std::uint8_t> grid_key(const Grid& g) {
  std::vector<std::uint8_t> key;
  key.reserve(static_cast<std::size_t>(g.size() * g.size()));
  for (int y = 0; y < g.size(); ++y)
    for (int x = 0; x < g.size(); ++x) {
      const Cell& c = g.at(x, y);
      key.push_back(c.occupied ? static_cast<std::uint8_t>(1 + utterance_code(c.object, c.colour)) : 0);
    }
  return key;
}

}  // namespace

ProgramSpace::ProgramSpace(Grammar g) : grammar_(std::move(g)) {
  if (grammar_.grid_size < 1 || grammar_.grid_size > kMaxGridSize) throw std::invalid_argument("grid size");
  arities_ = grammar_.arities();
  for (int i = 0; i < kNumNonterminals; ++i) {
    slot_offset_[static_cast<std::size_t>(i)] = num_slots_;
    num_slots_ += arities_[static_cast<std::size_t>(i)];
  }

  programs_ = enumerate_programs(grammar_);
  const std::size_t n = programs_.size();
  grids_.reserve(n);
  for (const auto& p : programs_) grids_.push_back(render(grammar_, p));

  std::map<std::vector<std::uint8_t>, std::uint32_t> classes;
  rendering_class_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = classes.emplace(grid_key(grids_[i]), static_cast<std::uint32_t>(classes.size()));
    rendering_class_[i] = it->second;
  }
  class_count_ = classes.size();

  all_ = Bitset(n, true);
  by_utterance_.assign(static_cast<std::size_t>(alphabet_size()), Bitset(n));
  program_utterance_offset_.reserve(n + 1);
  program_utterance_offset_.push_back(0);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& u : valid_utterances(grids_[i])) {
      const UtteranceId id = utterance_id(u);
      by_utterance_[static_cast<std::size_t>(id)].set(i);
      program_utterances_.push_back(id);
    }
    program_utterance_offset_.push_back(static_cast<std::uint32_t>(program_utterances_.size()));
  }

  root_counts_ = extension_counts(all_, true);
}

const ProgramSpace& ProgramSpace::standard() {
  static const ProgramSpace space(Grammar::standard());
  return space;
}

std::optional<std::size_t> ProgramSpace::index_of(const Program& p) const {
  auto it = std::lower_bound(programs_.begin(), programs_.end(), p);
  if (it == programs_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - programs_.begin());
}

UtteranceId ProgramSpace::utterance_id(const Utterance& u) const {
  if (u.x >= grammar_.grid_size || u.y >= grammar_.grid_size) throw std::out_of_range("utterance outside grid");
  const int cell = u.y * grammar_.grid_size + u.x;
  return cell * kUtterancesPerCell + utterance_code(u.object, u.colour);
}

Utterance ProgramSpace::utterance(UtteranceId id) const {
  const int cell = id / kUtterancesPerCell;
  const int code = id % kUtterancesPerCell;
  const int x = cell % grammar_.grid_size;
  const int y = cell / grammar_.grid_size;
  if (code == 6) return Utterance::make(x, y, Object::kPebble, 0);
  return Utterance::make(x, y, static_cast<Object>(code / kNumColours), code % kNumColours);
}

Bitset ProgramSpace::consistent_set(const Spec& d) const {
  Bitset c = all_;
  for (const auto& u : d) {
    if (u.x >= grammar_.grid_size || u.y >= grammar_.grid_size) return Bitset(size());
    c &= consistent_with(utterance_id(u));
  }
  return c;
}

std::span<const UtteranceId> ProgramSpace::utterances_of(std::size_t i) const {
  const auto b = program_utterance_offset_[i];
  const auto e = program_utterance_offset_[i + 1];
  return {program_utterances_.data() + b, e - b};
}

ExtensionCounts ProgramSpace::extension_counts(const Bitset& consistent, bool with_slots) const {
  ExtensionCounts out;
  out.num_slots = num_slots_;
  const auto alphabet = static_cast<std::size_t>(alphabet_size());
  out.count.assign(alphabet, 0);
  if (with_slots) out.slot_count.assign(alphabet * static_cast<std::size_t>(num_slots_), 0);

  std::array<int, kNumNonterminals> slots{};
  consistent.for_each([&](std::size_t h) {
    const Program& p = programs_[h];
    for (int i = 0; i < kNumNonterminals; ++i) slots[static_cast<std::size_t>(i)] = slot(i, p[i]);
    for (UtteranceId u : utterances_of(h)) {
      ++out.count[static_cast<std::size_t>(u)];
      if (!with_slots) continue;
      std::uint32_t* row = out.slot_count.data() + static_cast<std::size_t>(u) * static_cast<std::size_t>(num_slots_);
      for (int s : slots) ++row[s];
    }
  });
  return out;
}

}  // namespace pragsynth

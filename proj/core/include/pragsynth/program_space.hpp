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

#ifndef PRAGSYNTH_PROGRAM_SPACE_HPP
#define PRAGSYNTH_PROGRAM_SPACE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pragsynth/bitset.hpp"
#include "pragsynth/dsl.hpp"

namespace pragsynth {

using UtteranceId = std::int32_t;

/// Objects-with-colour per cell: chicken x 3, pig x 3, pebble.
inline constexpr int kUtterancesPerCell = 7;

/// Counts over the programs of a consistent set C, for every alphabet
/// utterance u: `count[u] = |C & C_u|` and, when requested,
/// `slot_count[u * num_slots + slot(i, j)] = |{h in C & C_u : h[i] = j}|`.
struct ExtensionCounts {
  int num_slots = 0;
  std::vector<std::uint32_t> count;
  std::vector<std::uint32_t> slot_count;
};

/// The enumerated valid programs of a grammar with their renderings and the
/// utterance alphabet. Immutable after construction; safe to share between
/// threads.
class ProgramSpace {
 public:
  explicit ProgramSpace(Grammar g);

  /// Built on first use for Grammar::standard().
  static const ProgramSpace& standard();

  const Grammar& grammar() const { return grammar_; }
  const std::array<int, kNumNonterminals>& arities() const { return arities_; }

  std::size_t size() const { return programs_.size(); }
  const std::vector<Program>& programs() const { return programs_; }
  const Program& program(std::size_t i) const { return programs_[i]; }
  const Grid& grid(std::size_t i) const { return grids_[i]; }
  std::optional<std::size_t> index_of(const Program& p) const;

  /// Programs sharing a rendering get the same class id.
  std::uint32_t rendering_class(std::size_t i) const { return rendering_class_[i]; }
  std::size_t rendering_class_count() const { return class_count_; }
  bool same_rendering(std::size_t a, std::size_t b) const { return rendering_class_[a] == rendering_class_[b]; }

  int alphabet_size() const { return grammar_.grid_size * grammar_.grid_size * kUtterancesPerCell; }
  UtteranceId utterance_id(const Utterance& u) const;
  Utterance utterance(UtteranceId id) const;
  int cell_of(UtteranceId id) const { return id / kUtterancesPerCell; }

  const Bitset& all() const { return all_; }
  const Bitset& consistent_with(UtteranceId u) const { return by_utterance_[static_cast<std::size_t>(u)]; }
  /// C(d): programs consistent with every utterance of d.
  Bitset consistent_set(const Spec& d) const;
  /// Occupied-cell utterances of program i in row-major order.
  std::span<const UtteranceId> utterances_of(std::size_t i) const;

  int num_slots() const { return num_slots_; }
  int slot(int nt, int choice) const { return slot_offset_[static_cast<std::size_t>(nt)] + choice; }
  int slot_offset(int nt) const { return slot_offset_[static_cast<std::size_t>(nt)]; }

  ExtensionCounts extension_counts(const Bitset& consistent, bool with_slots) const;
  /// extension_counts(all(), true), computed once.
  const ExtensionCounts& root_extension_counts() const { return root_counts_; }

 private:
  Grammar grammar_;
  std::array<int, kNumNonterminals> arities_{};
  std::array<int, kNumNonterminals> slot_offset_{};
  int num_slots_ = 0;
  std::vector<Program> programs_;
  std::vector<Grid> grids_;
  std::vector<std::uint32_t> rendering_class_;
  std::size_t class_count_ = 0;
  Bitset all_;
  std::vector<Bitset> by_utterance_;
  std::vector<UtteranceId> program_utterances_;
  std::vector<std::uint32_t> program_utterance_offset_;
  ExtensionCounts root_counts_;
};

}  // namespace pragsynth

#endif  // PRAGSYNTH_PROGRAM_SPACE_HPP

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

// The box-pattern layout language.
//
// A program is a fixed sequence of twelve production choices, one per
// nonterminal, in the order
//
//   Program Shape Left Right Top Bottom Thickness O I Colour A1 A2
//
// and renders to a square grid (7x7 for the standard grammar). Occupied cells
// form the box [Left, Right] x [Top, Bottom]; the outer ring of width
// Thickness holds the O object and the rest holds the I object. Non-pebble
// cells are coloured [red, green, blue][A2(A1(x, y))]; pebbles are colourless
// and always carry colour index 0.
//
// Grammar is a value so tests can build reduced variants (smaller grid, fewer
// rules) that run through the same inference code.

#ifndef PRAGSYNTH_DSL_HPP
#define PRAGSYNTH_DSL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pragsynth {

inline constexpr int kNumNonterminals = 12;
inline constexpr int kMaxArity = 7;
inline constexpr int kMaxGridSize = 7;
inline constexpr int kNumColours = 3;

enum Nonterminal : int {
  kProgramNt = 0,
  kShapeNt,
  kLeftNt,
  kRightNt,
  kTopNt,
  kBottomNt,
  kThicknessNt,
  kOutsideNt,
  kInsideNt,
  kColourNt,
  kA1Nt,
  kA2Nt,
};

std::string_view nonterminal_name(int nt);
std::optional<int> nonterminal_from_name(std::string_view name);

enum class Object : std::uint8_t { kChicken = 0, kPig = 1, kPebble = 2 };

std::string_view object_name(Object o);
std::optional<Object> object_from_name(std::string_view name);

/// A1: the coordinate expression fed to the colour function.
enum class IndexFn : std::uint8_t { kX, kY, kXPlusY };
/// A2: maps the coordinate expression to a colour index.
enum class ColourFn : std::uint8_t { kZero, kOne, kTwo, kMod2, kMod2Plus1, kTwiceMod2 };

int apply(IndexFn f, int x, int y);
int apply(ColourFn f, int z);

struct Program {
  std::array<std::uint8_t, kNumNonterminals> choices{};

  int operator[](int nt) const { return choices[static_cast<std::size_t>(nt)]; }
  friend auto operator<=>(const Program&, const Program&) = default;
};

struct Cell {
  bool occupied = false;
  Object object = Object::kChicken;
  std::uint8_t colour = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

class Grid {
 public:
  explicit Grid(int size = kMaxGridSize) : size_(size) {}

  int size() const { return size_; }
  const Cell& at(int x, int y) const { return cells_[index(x, y)]; }
  Cell& at(int x, int y) { return cells_[index(x, y)]; }
  int occupied_count() const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  static std::size_t index(int x, int y) { return static_cast<std::size_t>(y * kMaxGridSize + x); }

  int size_;
  std::array<Cell, kMaxGridSize * kMaxGridSize> cells_{};
};

/// One revealed cell. Pebble utterances always carry colour 0.
struct Utterance {
  std::uint8_t x = 0;
  std::uint8_t y = 0;
  Object object = Object::kChicken;
  std::uint8_t colour = 0;

  static Utterance make(int x, int y, Object object, int colour);
  bool same_cell(const Utterance& o) const { return x == o.x && y == o.y; }
  friend auto operator<=>(const Utterance&, const Utterance&) = default;
};

/// Ordered sequence of utterances with pairwise distinct cells.
class Spec {
 public:
  Spec() = default;
  /// Keeps the first utterance for each cell and drops the rest.
  static Spec deduplicated(std::span<const Utterance> utterances);

  /// Appends `u` unless its cell is already revealed; returns whether it was added.
  bool add(Utterance u);
  bool has_cell(int x, int y) const;
  Spec prefix(std::size_t n) const;

  std::size_t size() const { return utterances_.size(); }
  bool empty() const { return utterances_.empty(); }
  const Utterance& operator[](std::size_t i) const { return utterances_[i]; }
  auto begin() const { return utterances_.begin(); }
  auto end() const { return utterances_.end(); }
  const std::vector<Utterance>& utterances() const { return utterances_; }

  friend bool operator==(const Spec&, const Spec&) = default;

 private:
  std::vector<Utterance> utterances_;
};

struct Box {
  int left, right, top, bottom, thickness;
  Object outside, inside;
  IndexFn a1;
  ColourFn a2;
};

/// Rule tables for each nonterminal. Program, Shape and Colour always have a
/// single rule.
struct Grammar {
  int grid_size = kMaxGridSize;
  std::vector<int> left, right, top, bottom;
  std::vector<int> thickness;
  std::vector<Object> outside, inside;
  std::vector<IndexFn> a1;
  std::vector<ColourFn> a2;

  /// The grammar used everywhere outside tests: arities
  /// [1, 1, 7, 7, 7, 7, 3, 2, 3, 1, 3, 6].
  static const Grammar& standard();

  std::array<int, kNumNonterminals> arities() const;
  std::string rule_label(int nt, int choice) const;

  bool in_range(const Program& p) const;
  /// Box constraints: left < right, top < bottom and both sides at least
  /// 2 * thickness + 1 long, so the interior is never empty.
  bool is_valid(const Program& p) const;
  /// Rule values of `p`; throws InvalidProgram when out of range.
  Box decode(const Program& p) const;
};

Grid render(const Grammar& g, const Program& p);
Grid render(const Program& p);

/// Does the occupied cell `c` agree with `u`? Colour is ignored for pebbles.
bool matches(const Cell& c, const Utterance& u);

bool consistent(const Grid& grid, const Spec& d);
bool consistent(const Grammar& g, const Program& p, const Spec& d);
bool consistent(const Program& p, const Spec& d);

/// One utterance per occupied cell, in row-major (y, x) order.
std::vector<Utterance> valid_utterances(const Grid& grid);
std::vector<Utterance> valid_utterances(const Program& p);

/// All valid programs in lexicographic order of their choices.
std::vector<Program> enumerate_programs(const Grammar& g);
std::vector<Program> enumerate_programs();

/// Fully expanded text form, e.g. "Box(1,5,1,6,2,chicken,pebble) [x|z%2]".
std::string describe(const Grammar& g, const Program& p);

}  // namespace pragsynth

#endif  // PRAGSYNTH_DSL_HPP

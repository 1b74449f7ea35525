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

#include "pragsynth/dsl.hpp"

#include <algorithm>
#include <sstream>

#include "pragsynth/errors.hpp"

namespace pragsynth {

namespace {

constexpr std::array<std::string_view, kNumNonterminals> kNonterminalNames = {
    "Program", "Shape", "Left", "Right", "Top", "Bottom", "Thickness", "O", "I", "Colour", "A1", "A2"};

constexpr std::array<std::string_view, 3> kObjectNames = {"chicken", "pig", "pebble"};
constexpr std::array<std::string_view, 3> kIndexFnNames = {"x", "y", "x+y"};
constexpr std::array<std::string_view, 6> kColourFnNames = {"z:0", "z:1", "z:2", "z:z%2", "z:z%2+1", "z:2*(z%2)"};

std::vector<int> iota_values(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

template <typename T>
const T& pick(const std::vector<T>& rules, int choice) {
  return rules[static_cast<std::size_t>(choice)];
}

}  // namespace

std::string_view nonterminal_name(int nt) {
  if (nt < 0 || nt >= kNumNonterminals) throw std::out_of_range("nonterminal index");
  return kNonterminalNames[static_cast<std::size_t>(nt)];
}

std::optional<int> nonterminal_from_name(std::string_view name) {
  for (int i = 0; i < kNumNonterminals; ++i)
    if (kNonterminalNames[static_cast<std::size_t>(i)] == name) return i;
  if (name == "Outside") return kOutsideNt;
  if (name == "Inside") return kInsideNt;
  return std::nullopt;
}

std::string_view object_name(Object o) { return kObjectNames[static_cast<std::size_t>(o)]; }

std::optional<Object> object_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kObjectNames.size(); ++i)
    if (kObjectNames[i] == name) return static_cast<Object>(i);
  return std::nullopt;
}

int apply(IndexFn f, int x, int y) {
  switch (f) {
    case IndexFn::kX: return x;
    case IndexFn::kY: return y;
    case IndexFn::kXPlusY: return x + y;
  }
  return 0;
}

int apply(ColourFn f, int z) {
  switch (f) {
    case ColourFn::kZero: return 0;
    case ColourFn::kOne: return 1;
    case ColourFn::kTwo: return 2;
    case ColourFn::kMod2: return z % 2;
    case ColourFn::kMod2Plus1: return z % 2 + 1;
    case ColourFn::kTwiceMod2: return 2 * (z % 2);
  }
  return 0;
}

int Grid::occupied_count() const {
  int n = 0;
  for (int y = 0; y < size_; ++y)
    for (int x = 0; x < size_; ++x) n += at(x, y).occupied ? 1 : 0;
  return n;
}

Utterance Utterance::make(int x, int y, Object object, int colour) {
  if (x < 0 || x >= kMaxGridSize || y < 0 || y >= kMaxGridSize) throw std::out_of_range("utterance coordinate");
  if (colour < 0 || colour >= kNumColours) throw std::out_of_range("utterance colour");
  Utterance u;
  u.x = static_cast<std::uint8_t>(x);
  u.y = static_cast<std::uint8_t>(y);
  u.object = object;
  u.colour = object == Object::kPebble ? 0 : static_cast<std::uint8_t>(colour);
  return u;
}

Spec Spec::deduplicated(std::span<const Utterance> utterances) {
  Spec d;
  for (const auto& u : utterances) d.add(u);
  return d;
}

bool Spec::add(Utterance u) {
  if (has_cell(u.x, u.y)) return false;
  if (u.object == Object::kPebble) u.colour = 0;
  utterances_.push_back(u);
  return true;
}

bool Spec::has_cell(int x, int y) const {
  return std::any_of(utterances_.begin(), utterances_.end(),
                     [&](const Utterance& u) { return u.x == x && u.y == y; });
}

Spec Spec::prefix(std::size_t n) const {
  Spec d;
  d.utterances_.assign(utterances_.begin(),
                       utterances_.begin() + static_cast<std::ptrdiff_t>(std::min(n, utterances_.size())));
  return d;
}

const Grammar& Grammar::standard() {
  static const Grammar g = [] {
    Grammar s;
    s.grid_size = 7;
    s.left = s.right = s.top = s.bottom = iota_values(7);
    s.thickness = {1, 2, 3};
    s.outside = {Object::kChicken, Object::kPig};
    s.inside = {Object::kChicken, Object::kPig, Object::kPebble};
    s.a1 = {IndexFn::kX, IndexFn::kY, IndexFn::kXPlusY};
    s.a2 = {ColourFn::kZero, ColourFn::kOne, ColourFn::kTwo,
            ColourFn::kMod2, ColourFn::kMod2Plus1, ColourFn::kTwiceMod2};
    return s;
  }();
  return g;
}

std::array<int, kNumNonterminals> Grammar::arities() const {
  auto n = [](const auto& v) { return static_cast<int>(v.size()); };
  return {1, 1, n(left), n(right), n(top), n(bottom), n(thickness), n(outside), n(inside), 1, n(a1), n(a2)};
}

std::string Grammar::rule_label(int nt, int choice) const {
  const auto ar = arities();
  if (nt < 0 || nt >= kNumNonterminals || choice < 0 || choice >= ar[static_cast<std::size_t>(nt)])
    throw std::out_of_range("rule index");
  switch (nt) {
    case kProgramNt: return "<Shape, Colour>";
    case kShapeNt: return "Box(Left, Right, Top, Bottom, Thickness, O, I)";
    case kLeftNt: return std::to_string(pick(left, choice));
    case kRightNt: return std::to_string(pick(right, choice));
    case kTopNt: return std::to_string(pick(top, choice));
    case kBottomNt: return std::to_string(pick(bottom, choice));
    case kThicknessNt: return std::to_string(pick(thickness, choice));
    case kOutsideNt: return std::string(object_name(pick(outside, choice)));
    case kInsideNt: return std::string(object_name(pick(inside, choice)));
    case kColourNt: return "[red, green, blue][A2(A1)]";
    case kA1Nt: return std::string(kIndexFnNames[static_cast<std::size_t>(pick(a1, choice))]);
    case kA2Nt: return std::string(kColourFnNames[static_cast<std::size_t>(pick(a2, choice))]);
  }
  return {};
}

bool Grammar::in_range(const Program& p) const {
  const auto ar = arities();
  for (int i = 0; i < kNumNonterminals; ++i)
    if (p[i] >= ar[static_cast<std::size_t>(i)]) return false;
  return true;
}

bool Grammar::is_valid(const Program& p) const {
  if (!in_range(p)) return false;
  const int l = pick(left, p[kLeftNt]);
  const int r = pick(right, p[kRightNt]);
  const int t = pick(top, p[kTopNt]);
  const int b = pick(bottom, p[kBottomNt]);
  const int th = pick(thickness, p[kThicknessNt]);
  return l < r && t < b && r - l + 1 >= 2 * th + 1 && b - t + 1 >= 2 * th + 1;
}

Box Grammar::decode(const Program& p) const {
  if (!in_range(p)) throw InvalidProgram("program choice out of range");
  return Box{pick(left, p[kLeftNt]),     pick(right, p[kRightNt]),     pick(top, p[kTopNt]),
             pick(bottom, p[kBottomNt]), pick(thickness, p[kThicknessNt]), pick(outside, p[kOutsideNt]),
             pick(inside, p[kInsideNt]), pick(a1, p[kA1Nt]),           pick(a2, p[kA2Nt])};
}

Grid render(const Grammar& g, const Program& p) {
  if (!g.is_valid(p)) throw InvalidProgram("program violates the box constraints");
  const Box b = g.decode(p);
  Grid grid(g.grid_size);
  for (int y = b.top; y <= b.bottom; ++y) {
    for (int x = b.left; x <= b.right; ++x) {
      Cell& c = grid.at(x, y);
      c.occupied = true;
      const int depth = std::min({x - b.left, b.right - x, y - b.top, b.bottom - y});
      c.object = depth < b.thickness ? b.outside : b.inside;
      c.colour = c.object == Object::kPebble ? 0 : static_cast<std::uint8_t>(apply(b.a2, apply(b.a1, x, y)));
    }
  }
  return grid;
}

Grid render(const Program& p) { return render(Grammar::standard(), p); }

bool matches(const Cell& c, const Utterance& u) {
  if (!c.occupied || c.object != u.object) return false;
  return u.object == Object::kPebble || c.colour == u.colour;
}

bool consistent(const Grid& grid, const Spec& d) {
  for (const auto& u : d) {
    if (u.x >= grid.size() || u.y >= grid.size()) return false;
    if (!matches(grid.at(u.x, u.y), u)) return false;
  }
  return true;
}

bool consistent(const Grammar& g, const Program& p, const Spec& d) { return consistent(render(g, p), d); }
bool consistent(const Program& p, const Spec& d) { return consistent(render(p), d); }

std::vector<Utterance> valid_utterances(const Grid& grid) {
  std::vector<Utterance> out;
  for (int y = 0; y < grid.size(); ++y) {
    for (int x = 0; x < grid.size(); ++x) {
      const Cell& c = grid.at(x, y);
      if (c.occupied) out.push_back(Utterance::make(x, y, c.object, c.colour));
    }
  }
  return out;
}

std::vector<Utterance> valid_utterances(const Program& p) { return valid_utterances(render(p)); }

std::vector<Program> enumerate_programs(const Grammar& g) {
  const auto ar = g.arities();
  std::vector<Program> out;
  Program p;
  // Odometer over the choice tuple, last nonterminal fastest, which yields
  // lexicographic order.
  for (;;) {
    if (g.is_valid(p)) out.push_back(p);
    int i = kNumNonterminals - 1;
    while (i >= 0) {
      auto& c = p.choices[static_cast<std::size_t>(i)];
      if (++c < ar[static_cast<std::size_t>(i)]) break;
      c = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

std::vector<Program> enumerate_programs() { return enumerate_programs(Grammar::standard()); }

std::string describe(const Grammar& g, const Program& p) {
  std::ostringstream os;
  os << "Box(" << g.rule_label(kLeftNt, p[kLeftNt]) << ',' << g.rule_label(kRightNt, p[kRightNt]) << ','
     << g.rule_label(kTopNt, p[kTopNt]) << ',' << g.rule_label(kBottomNt, p[kBottomNt]) << ','
     << g.rule_label(kThicknessNt, p[kThicknessNt]) << ',' << g.rule_label(kOutsideNt, p[kOutsideNt]) << ','
     << g.rule_label(kInsideNt, p[kInsideNt]) << ") [" << g.rule_label(kA1Nt, p[kA1Nt]) << '|'
     << g.rule_label(kA2Nt, p[kA2Nt]) << ']';
  return os.str();
}

}  // namespace pragsynth

#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latin {

// Shared error type. Every failure mode carries a code so callers (and the
// CLI) can branch on it without matching message strings.
class Error : public std::runtime_error {
 public:
  enum class Code {
    InvalidArgument,
    DuplicateCell,
    RowClash,
    ColClash,
    NotAPermutation,
    CellAlreadyColored,
    OddOrder,
    NotMultipleOfTen,
    NotFullyColored,
    WrongColorCount,
    BudgetExceeded,
    ParseError,
  };

  Error(Code code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

// 1-based cell coordinates; (1,1) is the top-left corner.
struct Position {
  int row = 0;
  int col = 0;

  friend constexpr bool operator==(const Position&, const Position&) = default;
  friend constexpr auto operator<=>(const Position&, const Position&) = default;
};

// A subset of the color alphabet {1..k}. Two 64-bit words give O(1)
// membership, union, difference and popcount, which caps the supported
// alphabet at 128 colors (and the grid order with it; see PartialColoring).
class ColorSet {
 public:
  static constexpr int kMaxColors = 128;

  ColorSet() = default;

  // The full set {1..k}.
  static ColorSet full(int k) {
    assert(k >= 0 && k <= kMaxColors);
    ColorSet s;
    const int lo = k < 64 ? k : 64;
    s.bits_[0] = lo == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << lo) - 1;
    if (k > 64) {
      const int hi = k - 64;
      s.bits_[1] = hi == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << hi) - 1;
    }
    return s;
  }

  bool contains(int color) const {
    assert(in_range(color));
    return (bits_[word(color)] >> bit(color)) & 1u;
  }

  void insert(int color) {
    assert(in_range(color));
    bits_[word(color)] |= std::uint64_t{1} << bit(color);
  }

  void erase(int color) {
    assert(in_range(color));
    bits_[word(color)] &= ~(std::uint64_t{1} << bit(color));
  }

  int count() const {
    return std::popcount(bits_[0]) + std::popcount(bits_[1]);
  }

  bool empty() const { return bits_[0] == 0 && bits_[1] == 0; }

  // Smallest member, 0 when empty.
  int min() const {
    if (bits_[0] != 0) return std::countr_zero(bits_[0]) + 1;
    if (bits_[1] != 0) return std::countr_zero(bits_[1]) + 65;
    return 0;
  }

  // Members in ascending order.
  std::vector<int> values() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int w = 0; w < 2; ++w) {
      std::uint64_t bits = bits_[w];
      while (bits != 0) {
        out.push_back(std::countr_zero(bits) + 64 * w + 1);
        bits &= bits - 1;
      }
    }
    return out;
  }

  friend ColorSet operator|(ColorSet a, const ColorSet& b) {
    a.bits_[0] |= b.bits_[0];
    a.bits_[1] |= b.bits_[1];
    return a;
  }

  friend ColorSet operator&(ColorSet a, const ColorSet& b) {
    a.bits_[0] &= b.bits_[0];
    a.bits_[1] &= b.bits_[1];
    return a;
  }

  // Set difference a \ b.
  friend ColorSet operator-(ColorSet a, const ColorSet& b) {
    a.bits_[0] &= ~b.bits_[0];
    a.bits_[1] &= ~b.bits_[1];
    return a;
  }

  friend bool operator==(const ColorSet&, const ColorSet&) = default;

 private:
  static bool in_range(int color) { return color >= 1 && color <= kMaxColors; }
  static int word(int color) { return (color - 1) >> 6; }
  static int bit(int color) { return (color - 1) & 63; }

  std::uint64_t bits_[2]{0, 0};
};

// The union u(i,j) of row i and column j: the 2n-1 cells sharing a
// coordinate with the center.
struct RowColUnion {
  Position center;
  std::vector<Position> cells;

  static RowColUnion around(int order, Position center);
};

// An n x n grid whose cells are either empty or carry a color in {1..k},
// with no color repeated within a row or column among the colored cells.
// The proper-coloring invariant is enforced on every mutation, so a
// PartialColoring can never hold an improper state.
//
// Per-row and per-column used-color sets are maintained incrementally, so
// availability queries are O(1).
//
// Values are cheap to copy; treat instances as values and mutate a copy
// owned by a single thread. Distinct instances are safe to use from
// different threads concurrently.
class PartialColoring {
 public:
  static constexpr int kMaxOrder = 128;
  static constexpr int kMaxColors = ColorSet::kMaxColors;

  // An all-empty grid of the given order using k colors.
  PartialColoring(int order, int num_colors);

  // Builds a grid with exactly the given cells colored. Throws
  // Error::DuplicateCell if a position repeats, Error::RowClash /
  // Error::ColClash if two equal colors meet in a line.
  static PartialColoring from_entries(
      int order, int num_colors,
      const std::vector<std::pair<Position, int>>& entries);

  int order() const { return n_; }
  int num_colors() const { return k_; }

  bool in_range(Position p) const {
    return p.row >= 1 && p.row <= n_ && p.col >= 1 && p.col <= n_;
  }

  bool is_empty(Position p) const { return at(p) == 0; }

  // The color of a cell, or nullopt for an empty cell.
  std::optional<int> color(Position p) const {
    const int c = at(p);
    if (c == 0) return std::nullopt;
    return c;
  }

  // Colors an empty cell. Throws Error::CellAlreadyColored if the cell is
  // colored, Error::RowClash / Error::ColClash if the color already appears
  // in the cell's row / column.
  void set(Position p, int color);

  // Removes the color of a cell; no-op on an empty cell.
  void clear(Position p);

  ColorSet row_used(int row) const;
  ColorSet col_used(int col) const;

  // Available colors of an empty cell: {1..k} minus the colors appearing
  // among the colored cells of u(row, col). Throws
  // Error::CellAlreadyColored on a colored cell.
  ColorSet available(Position p) const;

  // Positions of all empty cells in row-major order.
  std::vector<Position> uncolored_cells() const;

  int uncolored_count() const { return empty_count_; }
  int colored_count() const { return n_ * n_ - empty_count_; }
  bool fully_colored() const { return empty_count_ == 0; }

  // Rearrangement: cell (i,j) moves to (row_perm[i-1], col_perm[j-1]).
  // Both arguments must be bijections on {1..n}; throws
  // Error::NotAPermutation otherwise.
  PartialColoring permuted(const std::vector<int>& row_perm,
                           const std::vector<int>& col_perm) const;

  // Consistent recoloring: color c becomes color_perm[c-1]. The argument
  // must be a bijection on {1..k}.
  PartialColoring recolored(const std::vector<int>& color_perm) const;

  PartialColoring transposed() const;

  friend bool operator==(const PartialColoring&,
                         const PartialColoring&) = default;

 private:
  int index(Position p) const { return (p.row - 1) * n_ + (p.col - 1); }
  int at(Position p) const {
    assert(in_range(p));
    return cells_[static_cast<std::size_t>(index(p))];
  }

  int n_ = 0;
  int k_ = 0;
  int empty_count_ = 0;
  std::vector<std::uint8_t> cells_;  // 0 = empty, never exposed as a color
  std::vector<ColorSet> row_used_;
  std::vector<ColorSet> col_used_;
};

// Text grid format. Line 1 is "n k"; then n lines of n whitespace-separated
// tokens, each a decimal color in 1..k or "." for an empty cell. Trailing
// whitespace is ignored; any other token is a parse error
// (Error::ParseError). Improper grids fail with the from_entries errors.
PartialColoring read_grid(std::istream& in);
PartialColoring parse_grid(const std::string& text);
void write_grid(std::ostream& out, const PartialColoring& pc);
std::string to_text(const PartialColoring& pc);

}  // namespace latin

#include "latin/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace latin {

namespace {

std::string pos_str(Position p) {
  return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
}

// Checks that perm is a bijection on {1..n}.
bool is_permutation_of(const std::vector<int>& perm, int n) {
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : perm) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) return false;
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  return true;
}

}  // namespace

RowColUnion RowColUnion::around(int order, Position center) {
  if (order < 1) throw Error(Error::Code::InvalidArgument, "order must be positive");
  if (center.row < 1 || center.row > order || center.col < 1 || center.col > order)
    throw Error(Error::Code::InvalidArgument, "center " + pos_str(center) + " outside grid");
  RowColUnion u;
  u.center = center;
  u.cells.reserve(static_cast<std::size_t>(2 * order - 1));
  for (int c = 1; c <= order; ++c) u.cells.push_back({center.row, c});
  for (int r = 1; r <= order; ++r)
    if (r != center.row) u.cells.push_back({r, center.col});
  return u;
}

PartialColoring::PartialColoring(int order, int num_colors) {
  if (order < 1 || order > kMaxOrder)
    throw Error(Error::Code::InvalidArgument,
                "order must be in 1.." + std::to_string(kMaxOrder) +
                    ", got " + std::to_string(order));
  if (num_colors < 1 || num_colors > kMaxColors)
    throw Error(Error::Code::InvalidArgument,
                "number of colors must be in 1.." + std::to_string(kMaxColors) +
                    ", got " + std::to_string(num_colors));
  n_ = order;
  k_ = num_colors;
  empty_count_ = n_ * n_;
  cells_.assign(static_cast<std::size_t>(n_ * n_), 0);
  row_used_.assign(static_cast<std::size_t>(n_), ColorSet{});
  col_used_.assign(static_cast<std::size_t>(n_), ColorSet{});
}

PartialColoring PartialColoring::from_entries(
    int order, int num_colors,
    const std::vector<std::pair<Position, int>>& entries) {
  PartialColoring pc(order, num_colors);
  for (const auto& [pos, color] : entries) {
    if (!pc.in_range(pos))
      throw Error(Error::Code::InvalidArgument,
                  "position " + pos_str(pos) + " outside grid of order " +
                      std::to_string(order));
    if (!pc.is_empty(pos))
      throw Error(Error::Code::DuplicateCell,
                  "cell " + pos_str(pos) + " listed twice");
    pc.set(pos, color);
  }
  return pc;
}

void PartialColoring::set(Position p, int color) {
  if (!in_range(p))
    throw Error(Error::Code::InvalidArgument,
                "position " + pos_str(p) + " outside grid");
  if (color < 1 || color > k_)
    throw Error(Error::Code::InvalidArgument,
                "color " + std::to_string(color) + " outside 1.." +
                    std::to_string(k_));
  if (!is_empty(p))
    throw Error(Error::Code::CellAlreadyColored,
                "cell " + pos_str(p) + " is already colored");
  if (row_used_[static_cast<std::size_t>(p.row - 1)].contains(color))
    throw Error(Error::Code::RowClash, "color " + std::to_string(color) +
                                           " already in row " +
                                           std::to_string(p.row));
  if (col_used_[static_cast<std::size_t>(p.col - 1)].contains(color))
    throw Error(Error::Code::ColClash, "color " + std::to_string(color) +
                                           " already in column " +
                                           std::to_string(p.col));
  cells_[static_cast<std::size_t>(index(p))] = static_cast<std::uint8_t>(color);
  row_used_[static_cast<std::size_t>(p.row - 1)].insert(color);
  col_used_[static_cast<std::size_t>(p.col - 1)].insert(color);
  --empty_count_;
}

void PartialColoring::clear(Position p) {
  if (!in_range(p))
    throw Error(Error::Code::InvalidArgument,
                "position " + pos_str(p) + " outside grid");
  const int c = at(p);
  if (c == 0) return;
  cells_[static_cast<std::size_t>(index(p))] = 0;
  row_used_[static_cast<std::size_t>(p.row - 1)].erase(c);
  col_used_[static_cast<std::size_t>(p.col - 1)].erase(c);
  ++empty_count_;
}

ColorSet PartialColoring::row_used(int row) const {
  if (row < 1 || row > n_)
    throw Error(Error::Code::InvalidArgument, "row index outside grid");
  return row_used_[static_cast<std::size_t>(row - 1)];
}

ColorSet PartialColoring::col_used(int col) const {
  if (col < 1 || col > n_)
    throw Error(Error::Code::InvalidArgument, "column index outside grid");
  return col_used_[static_cast<std::size_t>(col - 1)];
}

ColorSet PartialColoring::available(Position p) const {
  if (!in_range(p))
    throw Error(Error::Code::InvalidArgument,
                "position " + pos_str(p) + " outside grid");
  if (!is_empty(p))
    throw Error(Error::Code::CellAlreadyColored,
                "cell " + pos_str(p) + " is already colored");
  return ColorSet::full(k_) - (row_used_[static_cast<std::size_t>(p.row - 1)] |
                               col_used_[static_cast<std::size_t>(p.col - 1)]);
}

std::vector<Position> PartialColoring::uncolored_cells() const {
  std::vector<Position> out;
  out.reserve(static_cast<std::size_t>(empty_count_));
  for (int r = 1; r <= n_; ++r)
    for (int c = 1; c <= n_; ++c)
      if (is_empty({r, c})) out.push_back({r, c});
  return out;
}

PartialColoring PartialColoring::permuted(
    const std::vector<int>& row_perm, const std::vector<int>& col_perm) const {
  if (!is_permutation_of(row_perm, n_) || !is_permutation_of(col_perm, n_))
    throw Error(Error::Code::NotAPermutation,
                "row/column permutations must be bijections on 1.." +
                    std::to_string(n_));
  PartialColoring out(n_, k_);
  for (int r = 1; r <= n_; ++r)
    for (int c = 1; c <= n_; ++c) {
      const int v = at({r, c});
      if (v != 0)
        out.set({row_perm[static_cast<std::size_t>(r - 1)],
                 col_perm[static_cast<std::size_t>(c - 1)]},
                v);
    }
  return out;
}

PartialColoring PartialColoring::recolored(
    const std::vector<int>& color_perm) const {
  if (!is_permutation_of(color_perm, k_))
    throw Error(Error::Code::NotAPermutation,
                "color permutation must be a bijection on 1.." +
                    std::to_string(k_));
  PartialColoring out(n_, k_);
  for (int r = 1; r <= n_; ++r)
    for (int c = 1; c <= n_; ++c) {
      const int v = at({r, c});
      if (v != 0) out.set({r, c}, color_perm[static_cast<std::size_t>(v - 1)]);
    }
  return out;
}

PartialColoring PartialColoring::transposed() const {
  PartialColoring out(n_, k_);
  for (int r = 1; r <= n_; ++r)
    for (int c = 1; c <= n_; ++c) {
      const int v = at({r, c});
      if (v != 0) out.set({c, r}, v);
    }
  return out;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

int parse_int_token(const std::string& tok, const std::string& what) {
  int value = 0;
  const char* begin = tok.data();
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw Error(Error::Code::ParseError, "bad " + what + " token '" + tok + "'");
  return value;
}

}  // namespace

PartialColoring read_grid(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw Error(Error::Code::ParseError, "empty input");
  const auto header = tokenize(line);
  if (header.size() != 2)
    throw Error(Error::Code::ParseError,
                "header must be 'n k', got '" + line + "'");
  const int n = parse_int_token(header[0], "order");
  const int k = parse_int_token(header[1], "color count");
  if (n < 1 || n > PartialColoring::kMaxOrder || k < 1 ||
      k > PartialColoring::kMaxColors)
    throw Error(Error::Code::ParseError,
                "order/colors outside supported range (max " +
                    std::to_string(PartialColoring::kMaxOrder) + ")");

  std::vector<std::pair<Position, int>> entries;
  for (int r = 1; r <= n; ++r) {
    if (!std::getline(in, line))
      throw Error(Error::Code::ParseError,
                  "missing row " + std::to_string(r));
    const auto tokens = tokenize(line);
    if (static_cast<int>(tokens.size()) != n)
      throw Error(Error::Code::ParseError,
                  "row " + std::to_string(r) + " has " +
                      std::to_string(tokens.size()) + " tokens, expected " +
                      std::to_string(n));
    for (int c = 1; c <= n; ++c) {
      const std::string& tok = tokens[static_cast<std::size_t>(c - 1)];
      if (tok == ".") continue;
      const int color = parse_int_token(tok, "cell");
      if (color < 1 || color > k)
        throw Error(Error::Code::ParseError,
                    "color " + tok + " outside 1.." + std::to_string(k) +
                        " at row " + std::to_string(r));
      entries.push_back({{r, c}, color});
    }
  }
  while (std::getline(in, line)) {
    if (!std::all_of(line.begin(), line.end(),
                     [](unsigned char ch) { return std::isspace(ch); }))
      throw Error(Error::Code::ParseError, "trailing content after grid");
  }
  return PartialColoring::from_entries(n, k, entries);
}

PartialColoring parse_grid(const std::string& text) {
  std::istringstream in(text);
  return read_grid(in);
}

void write_grid(std::ostream& out, const PartialColoring& pc) {
  out << pc.order() << ' ' << pc.num_colors() << '\n';
  for (int r = 1; r <= pc.order(); ++r) {
    for (int c = 1; c <= pc.order(); ++c) {
      if (c > 1) out << ' ';
      const auto color = pc.color({r, c});
      if (color)
        out << *color;
      else
        out << '.';
    }
    out << '\n';
  }
}

std::string to_text(const PartialColoring& pc) {
  std::ostringstream out;
  write_grid(out, pc);
  return out.str();
}

}  // namespace latin

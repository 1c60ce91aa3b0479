#include "latin/patterns.hpp"

#include <string>

namespace latin {

const char* to_string(Pattern p) {
  switch (p) {
    case Pattern::ThreeInLine:
      return "three-in-line";
    case Pattern::Rectangle:
      return "rectangle";
    case Pattern::Lemma3Chain:
      return "lemma3-chain";
    case Pattern::Config2:
      return "config2";
  }
  return "?";
}

namespace {

// Empty-cell columns per row, ascending.
std::vector<std::vector<int>> empty_cols_by_row(const PartialColoring& pc) {
  const int n = pc.order();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      if (pc.is_empty({r, c}))
        rows[static_cast<std::size_t>(r - 1)].push_back(c);
  return rows;
}

// Scans for the lemma-3 chain in the grid as given; used on the transposed
// grid for the Columns orientation, with positions mapped back by swapping
// coordinates.
std::optional<PatternWitness> scan_lemma3(const PartialColoring& pc,
                                          Orientation orientation) {
  const int n = pc.order();
  // Availability of every empty cell, computed once.
  std::vector<std::optional<ColorSet>> av(
      static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      if (pc.is_empty({r, c}))
        av[static_cast<std::size_t>((r - 1) * n + (c - 1))] =
            pc.available({r, c});
  auto avail = [&](int r, int c) -> const std::optional<ColorSet>& {
    return av[static_cast<std::size_t>((r - 1) * n + (c - 1))];
  };

  for (int r1 = 1; r1 <= n; ++r1)
    for (int r2 = 1; r2 <= n; ++r2) {
      if (r2 == r1) continue;
      for (int c1 = 1; c1 <= n; ++c1) {
        const auto& a1 = avail(r1, c1);
        if (!a1 || a1->count() != 1) continue;
        const int a = a1->min();
        for (int c2 = 1; c2 <= n; ++c2) {
          if (c2 == c1) continue;
          const auto& a2 = avail(r1, c2);
          if (!a2 || a2->count() != 2 || !a2->contains(a)) continue;
          const auto& a3 = avail(r2, c2);
          if (!a3 || a3->count() != 2) continue;
          const int b = (*a2 - *a1).min();
          if (!a3->contains(b)) continue;
          for (int c3 = 1; c3 <= n; ++c3) {
            if (c3 == c1 || c3 == c2) continue;
            if (!pc.is_empty({r2, c3})) continue;
            PatternWitness w;
            w.pattern = Pattern::Lemma3Chain;
            w.orientation = orientation;
            w.positions = {{r1, c1}, {r1, c2}, {r2, c2}, {r2, c3}};
            w.available_sets = {*a1, *a2, *a3};
            if (orientation == Orientation::Columns)
              for (auto& p : w.positions) std::swap(p.row, p.col);
            return w;
          }
        }
      }
    }
  return std::nullopt;
}

}  // namespace

std::optional<PatternWitness> detect_three_in_line(const PartialColoring& pc) {
  const int n = pc.order();
  const auto rows = empty_cols_by_row(pc);
  for (int r = 1; r <= n; ++r) {
    const auto& cols = rows[static_cast<std::size_t>(r - 1)];
    if (cols.size() >= 3) {
      PatternWitness w;
      w.pattern = Pattern::ThreeInLine;
      w.orientation = Orientation::Rows;
      w.positions = {{r, cols[0]}, {r, cols[1]}, {r, cols[2]}};
      return w;
    }
  }
  for (int c = 1; c <= n; ++c) {
    std::vector<int> empties;
    for (int r = 1; r <= n; ++r)
      if (pc.is_empty({r, c})) empties.push_back(r);
    if (empties.size() >= 3) {
      PatternWitness w;
      w.pattern = Pattern::ThreeInLine;
      w.orientation = Orientation::Columns;
      w.positions = {{empties[0], c}, {empties[1], c}, {empties[2], c}};
      return w;
    }
  }
  return std::nullopt;
}

std::optional<PatternWitness> detect_rectangle(const PartialColoring& pc) {
  const int n = pc.order();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int x = 1; x <= n; ++x) {
        if (!pc.is_empty({a, x}) || !pc.is_empty({b, x})) continue;
        for (int y = x + 1; y <= n; ++y) {
          if (pc.is_empty({a, y}) && pc.is_empty({b, y})) {
            PatternWitness w;
            w.pattern = Pattern::Rectangle;
            w.orientation = Orientation::Rows;
            w.positions = {{a, x}, {a, y}, {b, x}, {b, y}};
            return w;
          }
        }
      }
  return std::nullopt;
}

std::optional<PatternWitness> detect_lemma3_chain(const PartialColoring& pc) {
  if (auto w = scan_lemma3(pc, Orientation::Rows)) return w;
  return scan_lemma3(pc.transposed(), Orientation::Columns);
}

std::optional<PatternWitness> detect_config2(const PartialColoring& pc) {
  const int n = pc.order();
  const auto rows = empty_cols_by_row(pc);
  auto empty = [&](int r, int c) { return pc.is_empty({r, c}); };
  for (int r1 = 1; r1 <= n; ++r1) {
    if (rows[static_cast<std::size_t>(r1 - 1)].size() < 2) continue;
    for (int r2 = 1; r2 <= n; ++r2) {
      if (r2 == r1 || rows[static_cast<std::size_t>(r2 - 1)].size() < 2)
        continue;
      for (int r3 = 1; r3 <= n; ++r3) {
        if (r3 == r1 || r3 == r2 ||
            rows[static_cast<std::size_t>(r3 - 1)].empty())
          continue;
        for (int c1 = 1; c1 <= n; ++c1) {
          if (!empty(r1, c1)) continue;
          for (int c2 = 1; c2 <= n; ++c2) {
            if (c2 == c1 || !empty(r1, c2) || !empty(r2, c2)) continue;
            for (int c3 = 1; c3 <= n; ++c3) {
              if (c3 == c1 || c3 == c2) continue;
              if (empty(r2, c3) && empty(r3, c3)) {
                PatternWitness w;
                w.pattern = Pattern::Config2;
                w.orientation = Orientation::Rows;
                w.positions = {
                    {r1, c1}, {r1, c2}, {r2, c2}, {r2, c3}, {r3, c3}};
                return w;
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<PatternWitness> detect_all(const PartialColoring& pc) {
  std::vector<PatternWitness> out;
  if (auto w = detect_three_in_line(pc)) out.push_back(std::move(*w));
  if (auto w = detect_rectangle(pc)) out.push_back(std::move(*w));
  if (auto w = detect_lemma3_chain(pc)) out.push_back(std::move(*w));
  if (auto w = detect_config2(pc)) out.push_back(std::move(*w));
  return out;
}

bool check_uncolored_bound(const PartialColoring& pc) {
  const int n = pc.order();
  if (pc.num_colors() != 2 * n - 2)
    throw Error(Error::Code::WrongColorCount,
                "the uncolored bound applies to k = 2n-2, got k = " +
                    std::to_string(pc.num_colors()) + " for n = " +
                    std::to_string(n));
  return pc.uncolored_count() <= 8 * n / 5;
}

}  // namespace latin

#pragma once

#include <optional>
#include <vector>

#include "latin/core.hpp"

namespace latin {

// Forbidden configurations whose presence rules out a unique extension to
// L(n, 2n-2). The detectors are rearrangement-closed: they quantify over
// arbitrary distinct rows and columns, not adjacent ones, since unique
// extendability is invariant under row/column switches.
enum class Pattern { ThreeInLine, Rectangle, Lemma3Chain, Config2 };

const char* to_string(Pattern p);

// Rows is the as-stated form of a pattern; Columns is its transpose.
enum class Orientation { Rows, Columns };

struct PatternWitness {
  Pattern pattern = Pattern::ThreeInLine;
  Orientation orientation = Orientation::Rows;
  // Cells realizing the pattern, in the pattern's own reading order.
  std::vector<Position> positions;
  // Available-color sets of the constrained cells (Lemma3Chain only).
  std::vector<ColorSet> available_sets;
};

// Three empty cells sharing a row (Orientation::Rows) or a column
// (Orientation::Columns). First witness in row-then-column scan order.
std::optional<PatternWitness> detect_three_in_line(const PartialColoring& pc);

// Four empty cells at the corners of a rectangle: rows a < b and columns
// x < y with (a,x), (a,y), (b,x), (b,y) all empty.
std::optional<PatternWitness> detect_rectangle(const PartialColoring& pc);

// Empty cells (r1,c1), (r1,c2), (r2,c2), (r2,c3) over distinct rows r1,r2
// and distinct columns c1,c2,c3 whose available sets are {a}, {a,b} (a != b)
// and {b,c} (b != c), the fourth cell merely empty; plus the transposed
// form. The witness carries the three constrained available sets.
std::optional<PatternWitness> detect_lemma3_chain(const PartialColoring& pc);

// The five-cell staircase: distinct rows r1,r2,r3 and distinct columns
// c1,c2,c3 with (r1,c1), (r1,c2), (r2,c2), (r2,c3), (r3,c3) all empty. The
// transposed staircase is the same relation with roles renamed, so one scan
// covers both orientations.
std::optional<PatternWitness> detect_config2(const PartialColoring& pc);

// All four detectors in the order above; at most one witness per pattern.
std::vector<PatternWitness> detect_all(const PartialColoring& pc);

// True iff the number of empty cells is at most floor(8n/5). The bound is
// specific to k = 2n-2; throws Error::WrongColorCount otherwise.
bool check_uncolored_bound(const PartialColoring& pc);

}  // namespace latin

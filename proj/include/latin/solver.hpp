#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latin/core.hpp"

namespace latin {

// Outcome of an extension count. Aborted is reported only when a node
// budget ran out before the trichotomy could be decided; it is never
// silently folded into the other verdicts.
enum class Verdict { None, Unique, Multiple, Aborted };

const char* to_string(Verdict v);

struct SolveOptions {
  // Stop after this many completions have been found; 2 suffices to decide
  // the none/unique/multiple trichotomy.
  int cap = 2;
  // Optional limit on backtracking decisions (propagation fills are free).
  std::optional<std::uint64_t> node_budget;
  // Number of workers splitting the top-level branching. The verdict equals
  // the sequential one; the concrete witnesses in Multiple mode and the
  // node count may differ between runs when threads > 1. With a node budget
  // set, runs that end near the budget may report Aborted where the
  // sequential run would not (and vice versa).
  int threads = 1;
};

struct ExtensionReport {
  Verdict verdict = Verdict::None;
  // Present iff verdict == Unique.
  std::optional<PartialColoring> completion;
  // Two distinct completions iff verdict == Multiple.
  std::vector<PartialColoring> witnesses;
  std::uint64_t nodes_explored = 0;
};

// One forced cell: at the moment it was filled, the cell had exactly one
// available color.
struct PropagationStep {
  Position pos;
  int color = 0;

  friend bool operator==(const PropagationStep&,
                         const PropagationStep&) = default;
};

struct PropagationTrace {
  std::vector<PropagationStep> steps;
  // Set when propagation stopped because this empty cell ran out of
  // available colors.
  std::optional<Position> contradiction;

  // One "(row,col) <- color" line per step; a terminal
  // "contradiction at (row,col)" line when propagation failed.
  std::string to_text() const;
};

// Decides whether pc extends to L(n,k) zero, one, or multiple ways.
// Exact search: backtracking over empty cells ordered by minimum remaining
// values (row-major tie-break, colors ascending), interleaved with singleton
// propagation. A contradiction during root propagation yields None without
// any search.
ExtensionReport count_extensions(const PartialColoring& pc,
                                 const SolveOptions& options = {});
ExtensionReport count_extensions(const PartialColoring& pc, int cap);

// Repeatedly colors empty cells whose available set is a singleton until
// none remains or some empty cell has no available color. Cells that are
// forced at the same time are filled in row-major order, so each round of
// forced cells appears in the trace before the cells it newly forces. The
// result is a fixpoint: no empty cell has exactly one available color
// (unless a contradiction cut the process short, which is a result state,
// not an error).
std::pair<PartialColoring, PropagationTrace> propagate_singletons(
    const PartialColoring& pc);

// Exact oracle backing count_extensions: plain depth-first enumeration over
// empty cells in row-major order with colors ascending and no propagation,
// yielding up to cap completions in lexicographic row-major order. Kept
// deliberately independent of the MRV/propagation search path.
std::vector<PartialColoring> enumerate_extensions(const PartialColoring& pc,
                                                  std::size_t cap);

}  // namespace latin

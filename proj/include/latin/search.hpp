#pragma once

#include <cstdint>
#include <optional>

#include "latin/core.hpp"

namespace latin {

struct MinDefOptions {
  // Skip subsets whose empty cells contain three-in-line or a rectangle.
  // Sound only for k >= 2n-2 (the availability counting behind those
  // configurations needs that many colors), so the pruning is applied only
  // then regardless of this flag; the flag exists so tests can compare
  // pruned and unpruned runs.
  bool pattern_pruning = true;
};

struct MinDefResult {
  int size = 0;
  PartialColoring witness = PartialColoring(1, 1);
  // Subsets submitted to the solver; subsets skipped by the pruning are not
  // counted.
  std::uint64_t subsets_examined = 0;
};

// Smallest number of colored cells of `square` whose induced partial
// coloring extends uniquely (necessarily back to `square`). Subsets are
// enumerated level by level in increasing colored count — equivalently
// decreasing uncolored count — and a level is exhausted before the next
// one starts, so the first unique hit at a level is minimal: every smaller
// level has already failed in full. Within a level subsets are tried in
// lexicographic order of their cell indices, making the witness
// deterministic. Throws Error::NotFullyColored unless `square` is a
// completely colored (proper) grid.
MinDefResult min_defining_set_for_square(const PartialColoring& square,
                                         const MinDefOptions& options = {});

struct SearchOptions {
  // Upper bound on the estimated work (see estimate_work); exceeding it
  // throws Error::BudgetExceeded before any search happens. The default
  // admits n <= 3 with small alphabets (k <= 11) and refuses anything
  // larger until raised.
  std::uint64_t work_budget = 1'000'000;
  // Enumerate completed squares up to canonical form (first row relabeled
  // to 1..n, first column ascending under row permutation) instead of all
  // of them. Both modes return the same value; the flag exists for the
  // equivalence tests.
  bool symmetry_reduction = true;
  bool pattern_pruning = true;
  // Canonical representatives may be processed in parallel; d_value and
  // witness are schedule-independent (the reported witness is the
  // lexicographically least among the per-square minimal witnesses), the
  // counters are not.
  int threads = 1;
};

struct SearchResult {
  int n = 0;
  int k = 0;
  int d_value = 0;
  PartialColoring witness = PartialColoring(1, 1);
  std::uint64_t squares_examined = 0;
  std::uint64_t subsets_examined = 0;
};

// d(L(n,k)) by exhaustive, symmetry-reduced enumeration: the minimum of
// min_defining_set_for_square over representatives of every completed
// square. Row/column permutations and color relabelings map L(n,k) onto
// itself and preserve unique extendability, so restricting to canonical
// representatives loses nothing. Throws Error::BudgetExceeded when the
// work estimate is over budget and Error::InvalidArgument when L(n,k) is
// empty (k < n).
SearchResult defining_number(int n, int k, const SearchOptions& options = {});

// Work estimate used by the budget guard: the product of per-row
// arrangement counts, P(k,n)^(n-1). A coarse upper-bound proxy, not a
// prediction.
double estimate_work(int n, int k);

}  // namespace latin

#include "latin/search.hpp"

#include <atomic>
#include <functional>
#include <mutex>
#include <string>
#include <thread>

#include "latin/patterns.hpp"
#include "latin/solver.hpp"

namespace latin {

namespace {

// Row-major comparison with empty < any color.
bool lex_less(const PartialColoring& a, const PartialColoring& b) {
  for (int r = 1; r <= a.order(); ++r)
    for (int c = 1; c <= a.order(); ++c) {
      const int va = a.color({r, c}).value_or(0);
      const int vb = b.color({r, c}).value_or(0);
      if (va != vb) return va < vb;
    }
  return false;
}

// Advances comb (ascending indices into 0..total-1) to the next
// m-combination in lexicographic order; false when exhausted.
bool next_combination(std::vector<int>& comb, int total) {
  const int m = static_cast<int>(comb.size());
  int i = m - 1;
  while (i >= 0 && comb[static_cast<std::size_t>(i)] == total - m + i) --i;
  if (i < 0) return false;
  ++comb[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < m; ++j)
    comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

// Level-wise search bounded at max_colored (inclusive). nullopt when no
// subset of at most max_colored cells extends uniquely.
std::optional<std::pair<int, PartialColoring>> min_def_bounded(
    const PartialColoring& square, int max_colored, bool pruning,
    std::uint64_t& subsets_examined) {
  const int n = square.order();
  const int k = square.num_colors();
  const int total = n * n;
  const bool prune = pruning && k >= 2 * n - 2;

  for (int m = 0; m <= max_colored; ++m) {
    std::vector<int> comb(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) comb[static_cast<std::size_t>(i)] = i;
    bool more = true;
    while (more) {
      PartialColoring partial(n, k);
      for (int idx : comb) {
        const Position p{idx / n + 1, idx % n + 1};
        partial.set(p, *square.color(p));
      }
      const bool skip =
          prune && (detect_three_in_line(partial) || detect_rectangle(partial));
      if (!skip) {
        ++subsets_examined;
        if (count_extensions(partial, 2).verdict == Verdict::Unique)
          return {{m, std::move(partial)}};
      }
      more = m > 0 && next_combination(comb, total);
      if (m == 0) break;
    }
  }
  return std::nullopt;
}

// Visits completed squares of L(n,k), either all of them or only canonical
// representatives (first row pinned to 1..n by color relabeling, first
// column ascending below row 1 by row permutation).
void for_each_square(int n, int k, bool canonical,
                     const std::function<void(const PartialColoring&)>& visit) {
  PartialColoring pc(n, k);
  const int total = n * n;
  auto rec = [&](auto&& self, int idx) -> void {
    if (idx == total) {
      visit(pc);
      return;
    }
    const int r = idx / n + 1;
    const int c = idx % n + 1;
    const Position p{r, c};
    const ColorSet avail = pc.available(p);
    if (canonical && r == 1) {
      if (c <= k && avail.contains(c)) {
        pc.set(p, c);
        self(self, idx + 1);
        pc.clear(p);
      }
      return;
    }
    int lower = 0;
    if (canonical && c == 1 && r >= 3) lower = *pc.color({r - 1, 1});
    for (int color : avail.values()) {
      if (color <= lower) continue;
      pc.set(p, color);
      self(self, idx + 1);
      pc.clear(p);
    }
  };
  rec(rec, 0);
}

}  // namespace

MinDefResult min_defining_set_for_square(const PartialColoring& square,
                                         const MinDefOptions& options) {
  if (!square.fully_colored())
    throw Error(Error::Code::NotFullyColored,
                "minimum defining set requires a fully colored square");
  MinDefResult result;
  auto hit = min_def_bounded(square, square.order() * square.order(),
                             options.pattern_pruning, result.subsets_examined);
  // The full square itself always extends uniquely, so the top level hits.
  result.size = hit->first;
  result.witness = std::move(hit->second);
  return result;
}

double estimate_work(int n, int k) {
  double per_row = 1.0;
  for (int i = 0; i < n; ++i) per_row *= static_cast<double>(k - i);
  double work = 1.0;
  for (int i = 1; i < n; ++i) work *= per_row;
  return work;
}

SearchResult defining_number(int n, int k, const SearchOptions& options) {
  if (n < 1 || n > PartialColoring::kMaxOrder || k < 1 ||
      k > PartialColoring::kMaxColors)
    throw Error(Error::Code::InvalidArgument, "n/k outside supported range");
  if (k < n)
    throw Error(Error::Code::InvalidArgument,
                "L(n,k) is empty for k < n: a row needs n distinct colors");
  const double estimate = estimate_work(n, k);
  if (estimate > static_cast<double>(options.work_budget))
    throw Error(Error::Code::BudgetExceeded,
                "estimated work " + std::to_string(estimate) +
                    " exceeds budget " + std::to_string(options.work_budget) +
                    "; raise the budget to force the run");

  SearchResult result;
  result.n = n;
  result.k = k;
  const int total = n * n;

  std::optional<std::pair<int, PartialColoring>> best;
  auto consider = [&](std::optional<std::pair<int, PartialColoring>> r) {
    if (!r) return;
    if (!best || r->first < best->first ||
        (r->first == best->first && lex_less(r->second, best->second)))
      best = std::move(r);
  };

  if (options.threads <= 1) {
    for_each_square(n, k, options.symmetry_reduction,
                    [&](const PartialColoring& square) {
                      ++result.squares_examined;
                      const int bound = best ? best->first : total;
                      consider(min_def_bounded(square, bound,
                                               options.pattern_pruning,
                                               result.subsets_examined));
                    });
  } else {
    std::vector<PartialColoring> squares;
    for_each_square(n, k, options.symmetry_reduction,
                    [&](const PartialColoring& square) {
                      squares.push_back(square);
                    });
    result.squares_examined = squares.size();

    std::mutex mu;
    std::atomic<int> best_bound{total};
    std::atomic<std::uint64_t> subsets{0};
    const int workers =
        std::min<int>(options.threads, std::max<std::size_t>(squares.size(), 1));
    auto run = [&](int tid) {
      std::uint64_t local_subsets = 0;
      for (std::size_t i = static_cast<std::size_t>(tid); i < squares.size();
           i += static_cast<std::size_t>(workers)) {
        // A stale (larger) bound only wastes work; it never skips a square
        // that could match or beat the final minimum, so the reduced
        // (d, witness) is schedule-independent.
        const int bound = best_bound.load(std::memory_order_relaxed);
        auto r = min_def_bounded(squares[i], bound, options.pattern_pruning,
                                 local_subsets);
        if (r) {
          std::lock_guard<std::mutex> lock(mu);
          consider(std::move(r));
          best_bound.store(best->first, std::memory_order_relaxed);
        }
      }
      subsets.fetch_add(local_subsets, std::memory_order_relaxed);
    };
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) threads.emplace_back(run, t);
    for (auto& t : threads) t.join();
    result.subsets_examined = subsets.load();
  }

  if (!best)
    throw Error(Error::Code::InvalidArgument,
                "L(n,k) is empty; no defining number exists");
  result.d_value = best->first;
  result.witness = std::move(best->second);
  return result;
}

}  // namespace latin

#include "latin/solver.hpp"

#include <atomic>
#include <mutex>
#include <thread>

namespace latin {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::None:
      return "none";
    case Verdict::Unique:
      return "unique";
    case Verdict::Multiple:
      return "multiple";
    case Verdict::Aborted:
      return "aborted";
  }
  return "?";
}

std::string PropagationTrace::to_text() const {
  std::string out;
  for (const auto& step : steps) {
    out += "(" + std::to_string(step.pos.row) + "," +
           std::to_string(step.pos.col) + ") <- " + std::to_string(step.color) +
           "\n";
  }
  if (contradiction)
    out += "contradiction at (" + std::to_string(contradiction->row) + "," +
           std::to_string(contradiction->col) + ")\n";
  return out;
}

namespace {

// Mutable working copy of a PartialColoring with unchecked assignment;
// properness is maintained by only ever assigning available colors.
struct Board {
  int n = 0;
  int k = 0;
  std::vector<std::uint8_t> cells;  // 0 = empty
  std::vector<ColorSet> row_used;
  std::vector<ColorSet> col_used;
  int empty_count = 0;

  explicit Board(const PartialColoring& pc)
      : n(pc.order()),
        k(pc.num_colors()),
        cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0),
        row_used(static_cast<std::size_t>(n)),
        col_used(static_cast<std::size_t>(n)),
        empty_count(pc.uncolored_count()) {
    for (int r = 1; r <= n; ++r) {
      row_used[static_cast<std::size_t>(r - 1)] = pc.row_used(r);
      for (int c = 1; c <= n; ++c) {
        const auto color = pc.color({r, c});
        if (color) cells[idx(r, c)] = static_cast<std::uint8_t>(*color);
      }
    }
    for (int c = 1; c <= n; ++c)
      col_used[static_cast<std::size_t>(c - 1)] = pc.col_used(c);
  }

  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(c - 1);
  }

  bool is_empty(int r, int c) const { return cells[idx(r, c)] == 0; }

  ColorSet avail(int r, int c) const {
    return ColorSet::full(k) - (row_used[static_cast<std::size_t>(r - 1)] |
                                col_used[static_cast<std::size_t>(c - 1)]);
  }

  void assign(int r, int c, int color) {
    cells[idx(r, c)] = static_cast<std::uint8_t>(color);
    row_used[static_cast<std::size_t>(r - 1)].insert(color);
    col_used[static_cast<std::size_t>(c - 1)].insert(color);
    --empty_count;
  }

  void unassign(int r, int c) {
    const int color = cells[idx(r, c)];
    cells[idx(r, c)] = 0;
    row_used[static_cast<std::size_t>(r - 1)].erase(color);
    col_used[static_cast<std::size_t>(c - 1)].erase(color);
    ++empty_count;
  }

  PartialColoring to_partial() const {
    std::vector<std::pair<Position, int>> entries;
    entries.reserve(cells.size());
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c)
        if (!is_empty(r, c)) entries.push_back({{r, c}, cells[idx(r, c)]});
    return PartialColoring::from_entries(n, k, entries);
  }
};

// Fills forced singletons until fixpoint or contradiction. Each round takes
// a snapshot of the currently forced cells and fills them in row-major
// order; a snapshot cell whose set got emptied by an earlier fill of the
// same round is the contradiction cell. Returns false on contradiction.
// Filled cells are appended to trail (for undo) and trace (for reporting).
bool propagate(Board& b, std::vector<std::pair<int, int>>* trail,
               PropagationTrace* trace) {
  bool progress = true;
  std::vector<std::pair<int, int>> forced;
  while (progress) {
    progress = false;
    forced.clear();
    for (int r = 1; r <= b.n; ++r)
      for (int c = 1; c <= b.n; ++c) {
        if (!b.is_empty(r, c)) continue;
        const ColorSet a = b.avail(r, c);
        if (a.empty()) {
          if (trace) trace->contradiction = Position{r, c};
          return false;
        }
        if (a.count() == 1) forced.push_back({r, c});
      }
    for (const auto& [r, c] : forced) {
      const ColorSet a = b.avail(r, c);
      if (a.empty()) {
        if (trace) trace->contradiction = Position{r, c};
        return false;
      }
      const int color = a.min();
      b.assign(r, c, color);
      if (trail) trail->push_back({r, c});
      if (trace) trace->steps.push_back({{r, c}, color});
      progress = true;
    }
  }
  return true;
}

void undo(Board& b, const std::vector<std::pair<int, int>>& trail) {
  for (auto it = trail.rbegin(); it != trail.rend(); ++it)
    b.unassign(it->first, it->second);
}

// Empty cell with the fewest available colors, row-major tie-break.
// Only valid after propagation: every empty cell then has >= 2 choices.
std::pair<int, int> mrv_cell(const Board& b) {
  int best_r = 0, best_c = 0, best = ColorSet::kMaxColors + 1;
  for (int r = 1; r <= b.n; ++r)
    for (int c = 1; c <= b.n; ++c) {
      if (!b.is_empty(r, c)) continue;
      const int cnt = b.avail(r, c).count();
      if (cnt < best) {
        best = cnt;
        best_r = r;
        best_c = c;
      }
    }
  return {best_r, best_c};
}

struct SearchCtx {
  int cap = 2;
  std::optional<std::uint64_t> node_budget;
  std::vector<PartialColoring> found;
  std::uint64_t nodes = 0;
  bool aborted = false;

  // Shared state in parallel mode; null for the sequential solver.
  std::atomic<std::uint64_t>* shared_nodes = nullptr;
  std::atomic<int>* shared_found = nullptr;
  std::atomic<bool>* shared_abort = nullptr;

  bool should_stop() const {
    if (aborted) return true;
    if (static_cast<int>(found.size()) >= cap) return true;
    if (shared_found && shared_found->load(std::memory_order_relaxed) >= cap)
      return true;
    if (shared_abort && shared_abort->load(std::memory_order_relaxed))
      return true;
    return false;
  }

  // Accounts for one decision; false when the budget is exhausted.
  bool consume_node() {
    std::uint64_t spent;
    if (shared_nodes) {
      spent = shared_nodes->fetch_add(1, std::memory_order_relaxed);
    } else {
      spent = nodes;
    }
    ++nodes;
    if (node_budget && spent >= *node_budget) {
      aborted = true;
      if (shared_abort) shared_abort->store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  void record(const Board& b) {
    found.push_back(b.to_partial());
    if (shared_found) shared_found->fetch_add(1, std::memory_order_relaxed);
  }
};

void dfs(Board& b, SearchCtx& ctx) {
  std::vector<std::pair<int, int>> trail;
  if (!propagate(b, &trail, nullptr)) {
    undo(b, trail);
    return;
  }
  if (b.empty_count == 0) {
    ctx.record(b);
    undo(b, trail);
    return;
  }
  const auto [r, c] = mrv_cell(b);
  for (int color : b.avail(r, c).values()) {
    if (ctx.should_stop()) break;
    if (!ctx.consume_node()) break;
    b.assign(r, c, color);
    dfs(b, ctx);
    b.unassign(r, c);
  }
  undo(b, trail);
}

ExtensionReport make_report(std::vector<PartialColoring>&& found, bool aborted,
                            std::uint64_t nodes) {
  ExtensionReport rep;
  rep.nodes_explored = nodes;
  if (found.size() >= 2) {
    rep.verdict = Verdict::Multiple;
    rep.witnesses.assign(found.begin(), found.begin() + 2);
  } else if (aborted) {
    rep.verdict = Verdict::Aborted;
  } else if (found.size() == 1) {
    rep.verdict = Verdict::Unique;
    rep.completion = std::move(found.front());
  } else {
    rep.verdict = Verdict::None;
  }
  return rep;
}

ExtensionReport solve_sequential(const PartialColoring& pc,
                                 const SolveOptions& options) {
  Board b(pc);
  SearchCtx ctx;
  ctx.cap = options.cap;
  ctx.node_budget = options.node_budget;
  dfs(b, ctx);
  return make_report(std::move(ctx.found), ctx.aborted, ctx.nodes);
}

ExtensionReport solve_parallel(const PartialColoring& pc,
                               const SolveOptions& options) {
  Board root(pc);
  std::vector<std::pair<int, int>> trail;
  if (!propagate(root, &trail, nullptr))
    return make_report({}, false, 0);
  if (root.empty_count == 0) {
    std::vector<PartialColoring> found;
    found.push_back(root.to_partial());
    return make_report(std::move(found), false, 0);
  }

  const auto [r, c] = mrv_cell(root);
  const std::vector<int> colors = root.avail(r, c).values();

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<int> found_count{0};
  std::atomic<bool> abort_flag{false};
  std::vector<std::vector<PartialColoring>> branch_found(colors.size());
  std::vector<char> branch_aborted(colors.size(), 0);

  const int workers =
      std::min<int>(options.threads, static_cast<int>(colors.size()));
  auto run = [&](int tid) {
    for (std::size_t i = static_cast<std::size_t>(tid); i < colors.size();
         i += static_cast<std::size_t>(workers)) {
      if (found_count.load(std::memory_order_relaxed) >= options.cap) break;
      if (abort_flag.load(std::memory_order_relaxed)) break;
      SearchCtx ctx;
      ctx.cap = options.cap;
      ctx.node_budget = options.node_budget;
      ctx.shared_nodes = &nodes;
      ctx.shared_found = &found_count;
      ctx.shared_abort = &abort_flag;
      if (!ctx.consume_node()) {
        branch_aborted[i] = 1;
        break;
      }
      Board b = root;
      b.assign(r, c, colors[i]);
      dfs(b, ctx);
      branch_found[i] = std::move(ctx.found);
      if (ctx.aborted) branch_aborted[i] = 1;
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) threads.emplace_back(run, t);
  for (auto& t : threads) t.join();

  std::vector<PartialColoring> found;
  bool aborted = false;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    for (auto& f : branch_found[i])
      if (static_cast<int>(found.size()) < options.cap)
        found.push_back(std::move(f));
    if (branch_aborted[i]) aborted = true;
  }
  return make_report(std::move(found), aborted,
                     nodes.load(std::memory_order_relaxed));
}

}  // namespace

ExtensionReport count_extensions(const PartialColoring& pc,
                                 const SolveOptions& options) {
  if (options.cap < 2)
    throw Error(Error::Code::InvalidArgument, "cap must be at least 2");
  if (options.threads < 1)
    throw Error(Error::Code::InvalidArgument, "threads must be positive");
  if (options.threads > 1 && pc.uncolored_count() > 0)
    return solve_parallel(pc, options);
  return solve_sequential(pc, options);
}

ExtensionReport count_extensions(const PartialColoring& pc, int cap) {
  SolveOptions options;
  options.cap = cap;
  return count_extensions(pc, options);
}

std::pair<PartialColoring, PropagationTrace> propagate_singletons(
    const PartialColoring& pc) {
  Board b(pc);
  PropagationTrace trace;
  propagate(b, nullptr, &trace);
  return {b.to_partial(), std::move(trace)};
}

std::vector<PartialColoring> enumerate_extensions(const PartialColoring& pc,
                                                  std::size_t cap) {
  if (cap < 1)
    throw Error(Error::Code::InvalidArgument, "cap must be at least 1");
  Board b(pc);
  std::vector<PartialColoring> out;
  const int total = b.n * b.n;

  // Row-major cell order with ascending colors yields completions in
  // lexicographic order of their row-major cell sequence.
  auto rec = [&](auto&& self, int idx) -> void {
    if (out.size() >= cap) return;
    if (idx == total) {
      out.push_back(b.to_partial());
      return;
    }
    const int r = idx / b.n + 1;
    const int c = idx % b.n + 1;
    if (!b.is_empty(r, c)) {
      self(self, idx + 1);
      return;
    }
    for (int color : b.avail(r, c).values()) {
      b.assign(r, c, color);
      self(self, idx + 1);
      b.unassign(r, c);
      if (out.size() >= cap) break;
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace latin

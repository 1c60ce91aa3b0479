#include <random>
#include <sstream>

#include "doctest.h"
#include "latin/core.hpp"
#include "test_util.hpp"

using namespace latin;
using namespace latin::test;

namespace {

bool throws_code(Error::Code code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("color sets have O(1) set algebra over 1..128") {
  ColorSet s = ColorSet::full(10);
  CHECK(s.count() == 10);
  CHECK(s.contains(1));
  CHECK(s.contains(10));
  CHECK_FALSE(s.contains(11));

  s.erase(3);
  CHECK(s.count() == 9);
  CHECK(s.min() == 1);
  s.erase(1);
  CHECK(s.min() == 2);

  ColorSet t;
  t.insert(3);
  t.insert(128);
  CHECK((s | t).contains(128));
  CHECK((s & t).empty());
  CHECK((ColorSet::full(128) - ColorSet::full(127)).values() ==
        std::vector<int>{128});
  CHECK(ColorSet::full(128).count() == 128);
  CHECK(ColorSet::full(64).count() == 64);
  CHECK(ColorSet::full(65).min() == 1);
  CHECK(t.values() == std::vector<int>{3, 128});
}

TEST_CASE("row/column union has 2n-1 cells sharing a coordinate") {
  const auto u = RowColUnion::around(5, {2, 3});
  CHECK(u.cells.size() == 9);
  for (const Position& p : u.cells)
    CHECK((p.row == 2 || p.col == 3));
  CHECK(std::count(u.cells.begin(), u.cells.end(), Position{2, 3}) == 1);
}

TEST_CASE("new grids from entries") {
  SUBCASE("1x1 empty grid") {
    const PartialColoring pc = PartialColoring::from_entries(1, 1, {});
    CHECK(pc.order() == 1);
    CHECK(pc.uncolored_count() == 1);
  }

  SUBCASE("the 17-entry 5x5 grid is proper with 8 empty cells") {
    const PartialColoring pc = G(kFiveEightPartial);
    CHECK(pc.order() == 5);
    CHECK(pc.num_colors() == 8);
    CHECK(pc.colored_count() == 17);
    CHECK(pc.uncolored_count() == 8);
  }

  SUBCASE("same color twice in a row is rejected") {
    CHECK(throws_code(Error::Code::RowClash, [] {
      PartialColoring::from_entries(2, 3, {{{1, 1}, 1}, {{1, 2}, 1}});
    }));
  }

  SUBCASE("same color twice in a column is rejected") {
    CHECK(throws_code(Error::Code::ColClash, [] {
      PartialColoring::from_entries(2, 3, {{{1, 1}, 2}, {{2, 1}, 2}});
    }));
  }

  SUBCASE("a position listed twice is rejected") {
    CHECK(throws_code(Error::Code::DuplicateCell, [] {
      PartialColoring::from_entries(2, 3, {{{1, 1}, 1}, {{1, 1}, 2}});
    }));
  }

  SUBCASE("out-of-range parameters are rejected") {
    CHECK(throws_code(Error::Code::InvalidArgument,
                      [] { PartialColoring(0, 1); }));
    CHECK(throws_code(Error::Code::InvalidArgument,
                      [] { PartialColoring(2, 129); }));
    CHECK(throws_code(Error::Code::InvalidArgument, [] {
      PartialColoring::from_entries(2, 2, {{{3, 1}, 1}});
    }));
    CHECK(throws_code(Error::Code::InvalidArgument, [] {
      PartialColoring::from_entries(2, 2, {{{1, 1}, 3}});
    }));
  }

  SUBCASE("reading back entries is the identity") {
    const std::vector<std::pair<Position, int>> entries = {
        {{1, 2}, 3}, {{2, 1}, 1}, {{3, 3}, 2}};
    const PartialColoring pc = PartialColoring::from_entries(3, 4, entries);
    for (const auto& [pos, color] : entries)
      CHECK(pc.color(pos) == color);
    CHECK(pc.uncolored_count() == 6);
  }
}

TEST_CASE("available colors match the five-eight reference grid") {
  const PartialColoring pc = G(kFiveEightPartial);
  CHECK(pc.available({1, 1}).values() == std::vector<int>{1});
  CHECK(pc.available({1, 2}).values() == std::vector<int>{1, 2, 3});
  CHECK(pc.available({2, 2}).values() == std::vector<int>{2, 4});
  CHECK(pc.available({2, 3}).values() == std::vector<int>{4});
  CHECK(pc.available({3, 5}).values() == std::vector<int>{1});
  CHECK(pc.available({4, 4}).values() == std::vector<int>{2, 3, 4});
  CHECK(pc.available({4, 5}).values() == std::vector<int>{1, 2});
  CHECK(pc.available({5, 4}).values() == std::vector<int>{4});

  CHECK(throws_code(Error::Code::CellAlreadyColored,
                    [&] { pc.available({1, 3}); }));
}

TEST_CASE("available colors on an unconstrained cell") {
  const PartialColoring pc(1, 3);
  CHECK(pc.available({1, 1}) == ColorSet::full(3));
}

TEST_CASE("uncolored cells in row-major order") {
  SUBCASE("fully colored grid has none") {
    const PartialColoring pc = G("2 3\n1 2\n2 1\n");
    CHECK(pc.uncolored_cells().empty());
    CHECK(pc.fully_colored());
  }

  SUBCASE("the 5x5 example has the eight starred cells") {
    const std::vector<Position> expected = {{1, 1}, {1, 2}, {2, 2}, {2, 3},
                                            {3, 5}, {4, 4}, {4, 5}, {5, 4}};
    CHECK(G(kFiveEightPartial).uncolored_cells() == expected);
  }

  SUBCASE("the order-4 construction leaves exactly the diagonal") {
    const std::vector<Position> expected = {{1, 1}, {2, 2}, {3, 3}, {4, 4}};
    CHECK(G(kTwoNMinusOneOrder4).uncolored_cells() == expected);
  }
}

TEST_CASE("availability lower bound from colored neighbours") {
  // |available(p)| >= k - #colored cells of u(p), with equality when those
  // cells carry pairwise distinct colors.
  std::mt19937_64 rng(20260809);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const int k = n + static_cast<int>(rng() % 6);
    const PartialColoring pc =
        random_proper_partial(n, k, static_cast<int>(rng() % (n * n + 1)), rng);
    for (const Position& p : pc.uncolored_cells()) {
      int colored_in_u = 0;
      for (const Position& q : RowColUnion::around(n, p).cells)
        if (!pc.is_empty(q)) ++colored_in_u;
      CHECK(pc.available(p).count() >= pc.num_colors() - colored_in_u);
    }
  }
}

TEST_CASE("permutations rearrange rows and columns") {
  const PartialColoring pc = G(kFiveEightPartial);

  SUBCASE("identity leaves the grid unchanged") {
    CHECK(pc.permuted(identity_perm(5), identity_perm(5)) == pc);
  }

  SUBCASE("swapping the same rows twice is the identity") {
    std::vector<int> swap12 = {2, 1, 3, 4, 5};
    CHECK(pc.permuted(swap12, identity_perm(5)).permuted(swap12,
                                                         identity_perm(5)) ==
          pc);
  }

  SUBCASE("cells move to the permuted coordinates") {
    std::vector<int> rp = {3, 1, 2, 5, 4};
    std::vector<int> cp = {2, 4, 5, 1, 3};
    const PartialColoring out = pc.permuted(rp, cp);
    for (int r = 1; r <= 5; ++r)
      for (int c = 1; c <= 5; ++c)
        CHECK(out.color({rp[static_cast<std::size_t>(r - 1)],
                         cp[static_cast<std::size_t>(c - 1)]}) ==
              pc.color({r, c}));
  }

  SUBCASE("non-bijections are rejected") {
    CHECK(throws_code(Error::Code::NotAPermutation, [&] {
      pc.permuted({1, 1, 2, 3, 4}, identity_perm(5));
    }));
    CHECK(throws_code(Error::Code::NotAPermutation,
                      [&] { pc.permuted(identity_perm(4), identity_perm(5)); }));
    CHECK(throws_code(Error::Code::NotAPermutation,
                      [&] { pc.recolored(identity_perm(7)); }));
  }

  SUBCASE("availability commutes with rearrangement") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
      const auto rp = random_perm(5, rng);
      const auto cp = random_perm(5, rng);
      const PartialColoring out = pc.permuted(rp, cp);
      for (const Position& p : pc.uncolored_cells()) {
        const Position q{rp[static_cast<std::size_t>(p.row - 1)],
                         cp[static_cast<std::size_t>(p.col - 1)]};
        CHECK(out.available(q) == pc.available(p));
      }
    }
  }
}

TEST_CASE("recoloring maps colors consistently") {
  const PartialColoring pc = G("2 3\n1 2\n2 3\n");
  const PartialColoring out = pc.recolored({3, 1, 2});
  CHECK(out == G("2 3\n3 1\n1 2\n"));
}

TEST_CASE("transpose flips coordinates") {
  const PartialColoring pc = G(kFiveEightPartial);
  const PartialColoring t = pc.transposed();
  for (int r = 1; r <= 5; ++r)
    for (int c = 1; c <= 5; ++c)
      CHECK(t.color({c, r}) == pc.color({r, c}));
  CHECK(t.transposed() == pc);
}

TEST_CASE("grid text round trip") {
  const std::string text = kFiveEightPartial;
  CHECK(to_text(G(text)) == text);

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int k = 1 + static_cast<int>(rng() % 10);
    const PartialColoring pc =
        random_proper_partial(n, k, static_cast<int>(rng() % (n * n + 1)), rng);
    CHECK(G(to_text(pc)) == pc);
  }
}

TEST_CASE("grid parsing rejects malformed input") {
  CHECK(throws_code(Error::Code::ParseError, [] { parse_grid(""); }));
  CHECK(throws_code(Error::Code::ParseError, [] { parse_grid("2\n1 2\n2 1\n"); }));
  CHECK(throws_code(Error::Code::ParseError,
                    [] { parse_grid("2 3\n1 2\n2\n"); }));
  CHECK(throws_code(Error::Code::ParseError,
                    [] { parse_grid("2 3\n1 2 3\n2 1\n"); }));
  CHECK(throws_code(Error::Code::ParseError,
                    [] { parse_grid("2 3\n1 x\n2 1\n"); }));
  CHECK(throws_code(Error::Code::ParseError,
                    [] { parse_grid("2 3\n1 4\n2 1\n"); }));
  CHECK(throws_code(Error::Code::ParseError,
                    [] { parse_grid("2 3\n1 2\n2 1\nleftover\n"); }));
  CHECK(throws_code(Error::Code::RowClash,
                    [] { parse_grid("2 3\n1 1\n. .\n"); }));

  SUBCASE("trailing whitespace and blank lines are fine") {
    CHECK(parse_grid("2 3\n1 2  \n2 1\n\n  \n") == G("2 3\n1 2\n2 1\n"));
  }
}

}  // TEST_SUITE

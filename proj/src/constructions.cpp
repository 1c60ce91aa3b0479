#include "latin/constructions.hpp"

#include <numeric>
#include <string>

namespace latin {

namespace {

// Reduces v mod (n-1) into the color range {1..n-1}; residue 0 is n-1.
int rep_mod(int v, int n) {
  const int r = v % (n - 1);
  return r == 0 ? n - 1 : r;
}

}  // namespace

void ConstructionSpec::validate() const {
  switch (kind) {
    case ConstructionKind::TwoNMinusOne:
      if (n < 2)
        throw Error(Error::Code::InvalidArgument, "order must be at least 2");
      if (n % 2 != 0)
        throw Error(Error::Code::OddOrder,
                    "construction requires an even order, got " +
                        std::to_string(n));
      if (2 * n - 1 > PartialColoring::kMaxColors)
        throw Error(Error::Code::InvalidArgument,
                    "order too large: 2n-1 colors exceed " +
                        std::to_string(PartialColoring::kMaxColors));
      break;
    case ConstructionKind::FiveEight:
      if (n != 5)
        throw Error(Error::Code::InvalidArgument,
                    "the five-eight construction is fixed at order 5");
      break;
    case ConstructionKind::BlockTenM:
      if (n < 10 || n % 10 != 0)
        throw Error(Error::Code::NotMultipleOfTen,
                    "construction requires an order divisible by 10, got " +
                        std::to_string(n));
      if (2 * n - 2 > PartialColoring::kMaxColors)
        throw Error(Error::Code::InvalidArgument,
                    "order too large: 2n-2 colors exceed " +
                        std::to_string(PartialColoring::kMaxColors));
      break;
  }
}

PartialColoring construct(const ConstructionSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case ConstructionKind::TwoNMinusOne:
      return construct_2n_minus_1(spec.n);
    case ConstructionKind::FiveEight:
      return construct_five_eight();
    case ConstructionKind::BlockTenM:
      return construct_block_ten_m(spec.n);
  }
  throw Error(Error::Code::InvalidArgument, "unknown construction kind");
}

PartialColoring construct_2n_minus_1(int n) {
  ConstructionSpec spec{ConstructionKind::TwoNMinusOne, n};
  spec.validate();
  PartialColoring pc(n, 2 * n - 1);
  // Below-diagonal triangle, then its mirror shifted by n colors.
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j) {
      const int color = i == n ? rep_mod(2 * j, n) : rep_mod(i + j, n);
      pc.set({i, j}, color);
      pc.set({j, i}, color + n);
    }
  }
  return pc;
}

PartialColoring construct_five_eight() {
  // 0 marks an empty cell.
  static constexpr int kPattern[5][5] = {
      {0, 0, 7, 8, 4},
      {3, 0, 0, 1, 8},
      {2, 6, 5, 7, 0},
      {5, 7, 6, 0, 0},
      {6, 5, 2, 0, 3},
  };
  PartialColoring pc(5, 8);
  for (int r = 1; r <= 5; ++r)
    for (int c = 1; c <= 5; ++c)
      if (kPattern[r - 1][c - 1] != 0) pc.set({r, c}, kPattern[r - 1][c - 1]);
  return pc;
}

const std::vector<int>& ColorCorrespondence::image(int base_color) const {
  if (base_color < 1 || base_color > base_color_count())
    throw Error(Error::Code::InvalidArgument,
                "base color " + std::to_string(base_color) + " outside 1.." +
                    std::to_string(base_color_count()));
  return images_[static_cast<std::size_t>(base_color - 1)];
}

ColorCorrespondence make_correspondence(int n) {
  if (n < 10 || n % 10 != 0)
    throw Error(Error::Code::NotMultipleOfTen,
                "correspondence requires an order divisible by 10, got " +
                    std::to_string(n));
  const int m = n / 5;
  const int base_colors = 2 * m - 1;
  ColorCorrespondence f;
  f.images_.resize(static_cast<std::size_t>(base_colors));
  for (int i = 1; i <= base_colors; ++i) {
    std::vector<int>& img = f.images_[static_cast<std::size_t>(i - 1)];
    if (i == m) {
      img.resize(8);
      std::iota(img.begin(), img.end(), 1);
    } else {
      const int shift = i < m ? i - 1 : i - 2;
      img.resize(5);
      std::iota(img.begin(), img.end(), 8 + 5 * shift + 1);
    }
  }

  // The classes partition {1..2n-2} by construction; verify anyway so a
  // future edit cannot silently break the lift.
  std::vector<bool> seen(static_cast<std::size_t>(2 * n - 2), false);
  int total = 0;
  for (const auto& img : f.images_)
    for (int color : img) {
      if (color < 1 || color > 2 * n - 2 ||
          seen[static_cast<std::size_t>(color - 1)])
        throw std::logic_error("correspondence classes do not partition [2n-2]");
      seen[static_cast<std::size_t>(color - 1)] = true;
      ++total;
    }
  if (total != 2 * n - 2)
    throw std::logic_error("correspondence classes do not cover [2n-2]");
  return f;
}

PartialColoring construct_block_ten_m(int n) {
  ConstructionSpec spec{ConstructionKind::BlockTenM, n};
  spec.validate();
  const int m = n / 5;  // even because 10 | n

  // Base square of order m, oriented as in the 10x10 reference table (the
  // transpose of the construct_2n_minus_1 output; a transpose is a
  // rearrangement plus reflection, so properness and unique extendability
  // carry over). Its forced diagonal is filled with color m.
  PartialColoring base = construct_2n_minus_1(m).transposed();
  for (int i = 1; i <= m; ++i) base.set({i, i}, m);

  const ColorCorrespondence f = make_correspondence(n);
  const PartialColoring diag_block = construct_five_eight();

  PartialColoring pc(n, 2 * n - 2);
  for (int bi = 1; bi <= m; ++bi) {
    for (int bj = 1; bj <= m; ++bj) {
      const int row0 = 5 * (bi - 1);
      const int col0 = 5 * (bj - 1);
      if (bi == bj) {
        // Diagonal blocks repeat the 5x5 pattern over colors {1..8},
        // empty cells included. f(m) = {1..8}, so no remapping is needed.
        for (int r = 1; r <= 5; ++r)
          for (int c = 1; c <= 5; ++c) {
            const auto color = diag_block.color({r, c});
            if (color) pc.set({row0 + r, col0 + c}, *color);
          }
      } else {
        const std::vector<int>& img = f.image(*base.color({bi, bj}));
        for (int r = 1; r <= 5; ++r)
          for (int c = 1; c <= 5; ++c)
            pc.set({row0 + r, col0 + c},
                   img[static_cast<std::size_t>((r + c - 2) % 5)]);
      }
    }
  }
  return pc;
}

}  // namespace latin

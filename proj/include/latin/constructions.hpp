#pragma once

#include <vector>

#include "latin/core.hpp"

namespace latin {

enum class ConstructionKind { TwoNMinusOne, FiveEight, BlockTenM };

struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::FiveEight;
  int n = 5;

  // Throws Error on a kind/order mismatch (OddOrder, NotMultipleOfTen,
  // InvalidArgument).
  void validate() const;
};

PartialColoring construct(const ConstructionSpec& spec);

// Partial coloring of an n x n square (n even) over k = 2n-1 colors with
// exactly the n diagonal cells left empty; the diagonal is forced to color
// n, so the coloring extends uniquely. Cells (i,j) with i > j, i != n get
// color i+j reduced mod n-1 into {1..n-1} (residue 0 maps to n-1); cells
// (n,i) get 2i reduced the same way; each mirror cell (j,i) gets the color
// of (i,j) plus n.
PartialColoring construct_2n_minus_1(int n);

// The fixed 5x5 partial coloring over 8 colors with 8 empty cells that
// extends uniquely to L(5,8).
PartialColoring construct_five_eight();

// Partition of {1..2n-2} indexed by the base colors {1..2n/5-1}: one
// 8-color class for base color n/5 and five-color classes for the rest,
// each listed in ascending order.
class ColorCorrespondence {
 public:
  int base_color_count() const { return static_cast<int>(images_.size()); }

  const std::vector<int>& image(int base_color) const;

 private:
  friend ColorCorrespondence make_correspondence(int n);
  std::vector<std::vector<int>> images_;
};

// Requires n divisible by 10. The images are pairwise disjoint and cover
// {1..2n-2} exactly.
ColorCorrespondence make_correspondence(int n);

// Partial coloring of an n x n square (10 | n) over k = 2n-2 colors with
// exactly 8n/5 empty cells, built from 5x5 blocks: a base square of order
// n/5 (the construct_2n_minus_1 square, oriented as in the 10x10 reference
// table, with its forced diagonal filled in) is lifted through the color
// correspondence; off-diagonal blocks become cyclic 5x5 squares over their
// five-color class and diagonal blocks repeat the construct_five_eight
// pattern, empty cells included.
PartialColoring construct_block_ten_m(int n);

}  // namespace latin

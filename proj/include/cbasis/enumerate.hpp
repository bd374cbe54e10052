#pragma once

// Basis enumeration: admissible monomials degree slice by degree slice, the
// level-k bases as deduplicated slot products, and the canonical
// semi-infinite census with its stabilization sweep over tail indices.

#include <vector>

#include "cbasis/cartan.hpp"
#include "cbasis/character.hpp"
#include "cbasis/conditions.hpp"
#include "cbasis/monomial.hpp"
#include "cbasis/tails.hpp"

namespace cbasis {

/// Cross-degree coupling datum of a degree slice: whether the slice is
/// occupied and the largest column of its diagonal path.
struct PathFrontier {
  bool occupied = false;
  int max_column = 0;
};

struct DiagonalPath {
  std::vector<Color> cells;  // ascending columns
  int max_column = 0;        // 0 when empty
};

/// All diagonal paths with every row > row_floor, the empty path included.
std::vector<DiagonalPath> diagonal_paths(int ell, int row_floor);

/// Level-one basis monomials of W(Lambda_r): degrees <= -1, depth <= max_depth.
std::vector<Monomial> enumerate_level1(int r, int ell, int max_depth);

/// Level-one basis monomials of the 2m-shifted picture: degrees <= 2m-1 with
/// the row bound r at degree 2m-1, depth (which may be negative) <= max_depth.
std::vector<Monomial> enumerate_level1_tail(int r, int ell, int m, long long max_depth);

/// Largest possible total degree of one level-one admissible monomial in the
/// 2m-shifted picture (so -max_degree_sum is the least possible depth);
/// attained by the periodic tail stub.
long long max_degree_sum(int r, int ell, int m);

/// Level-k basis monomials of the 2m-shifted picture, generated as products
/// of one level-one monomial per slot, deduplicated, each output validated by
/// check_dc_ic_level_k.
std::vector<Monomial> enumerate_level_k(const HighestWeight& L, int m, long long max_depth);

struct SemiInfiniteBasis {
  std::vector<SemiInfiniteMonomial> items;  // canonical, sorted
  GradedCharacter census;                   // graded by total weight relative to v_Lambda
  int tail_sweeps = 0;                      // last tail index visited by the sweep
};

/// All canonical semi-infinite monomials of total depth <= max_depth.  The
/// tail index is swept upward until the census is unchanged for two
/// consecutive sweeps plus one margin step; a hard cap throws if
/// stabilization is not detected.
SemiInfiniteBasis enumerate_semi_infinite(const HighestWeight& L, int max_depth);

}  // namespace cbasis

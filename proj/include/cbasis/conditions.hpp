#pragma once

// Difference and initial conditions.
//
// A monomial satisfies the difference conditions (DC) when the colors of its
// factors of each degree form a diagonal path (strictly increasing columns
// and strictly increasing rows), and for every pair of adjacent occupied
// degrees n, n-1 each row of the (n-1)-part strictly exceeds the largest
// column of the n-part.  A skipped degree imposes no cross constraint.
//
// The initial condition (IC) for the target W(Lambda_r) forbids factors
// x_{ij}(-1) with j <= r.  IC_{2m} is the same condition transported along
// the degree shift by 2m.  At level k both conditions are expressed through
// the existence of a factorization into k level-one admissible pieces.

#include <optional>
#include <vector>

#include "cbasis/cartan.hpp"
#include "cbasis/monomial.hpp"

namespace cbasis {

bool check_dc_level1(const Monomial& p);

/// True iff p has no factor x_{ij}(-1) with j <= r; vacuous for r = 0.
bool check_ic_level1(const Monomial& p, int r);

/// IC via a difference-condition check on p with a degree-zero factor of
/// column r appended.  Requires r >= 1; for r = 0 use check_ic_level1.
bool ic_via_dc(const Monomial& p, int r);

/// True iff shift(p, 2m) has all degrees <= -1 and satisfies IC for r.
/// With m = 0 this is the plain "all degrees negative" IC; m may be any
/// integer.  A monomial lives in the shifted picture with degrees up to
/// 2m-1 exactly when check_ic_shifted(p, r, -m) holds.
bool check_ic_shifted(const Monomial& p, int r, int m);

/// Witness for the level-k admissibility of a monomial: an assignment of
/// each factor (indexed in canonical order) to one of the k slots, whose
/// targets are the fundamental indices of Lambda sorted descending.
struct Factorization {
  std::vector<int> slot_of_factor;
  std::vector<int> slot_targets;
};

/// Searches for a factorization of p into k pieces, each satisfying DC and
/// the 2m-shifted IC for its slot target.  Backtracking over factors from
/// the greatest down, with an incremental path frontier per slot.
std::optional<Factorization> check_dc_ic_level_k(const Monomial& p, const HighestWeight& L, int m);

/// Independent oracle: tries all k^t slot assignments.  Guarded to at most
/// 16 factors.
bool brute_force_level_k(const Monomial& p, const HighestWeight& L, int m);

}  // namespace cbasis

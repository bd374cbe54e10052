#pragma once

// Translation combinatorics for the inclusion chain of shifted subspaces:
// the periodic-path monomials nu_r and mu_r, the per-Lambda tail blocks,
// embeddings between consecutive shifted pictures, the canonical (minimal
// tail index) form of a semi-infinite monomial, and the weight calibration
// of the extremal vectors obtained by telescoping the embedding identity.

#include <string>

#include "cbasis/cartan.hpp"
#include "cbasis/conditions.hpp"
#include "cbasis/monomial.hpp"

namespace cbasis {

/// nu_r = x_{ell-r,ell}(-1) ... x_{2,r+2}(-1) x_{1,r+1}(-1); empty for r = ell.
Monomial nu(int r, int ell);

/// mu_r = shift(nu_{ell-r}, -1) * nu_r: r factors at degree -2 and ell-r at
/// degree -1, with classical weight 2*omega.
Monomial mu(int r, int ell);

/// Product of mu_{r_t} over the fundamental indices of Lambda.
Monomial mu_lambda(const HighestWeight& L);

/// The j-th periodic tail block, mu_Lambda shifted up by 2j; j >= 1.
Monomial tail_block(const HighestWeight& L, int j);

/// Pair (m, head): the element x(head) x(mu^{+2m+2}) x(mu^{+2m+4}) ... of the
/// inductive limit, with head admissible in the 2m-shifted picture.
struct SemiInfiniteMonomial {
  int m = 0;
  Monomial head;
  friend bool operator==(const SemiInfiniteMonomial&, const SemiInfiniteMonomial&) = default;
};

/// Head admissibility: DC plus the 2m-shifted IC, via the level-k factorization.
bool satisfies_dc_ic(const SemiInfiniteMonomial& s, const HighestWeight& L);

/// (m, head) -> (m+1, head * tail_block(m+1)); represents the same element.
SemiInfiniteMonomial embed(const SemiInfiniteMonomial& s, const HighestWeight& L);

/// Strips trailing tail blocks while the remainder stays admissible; the
/// result is the unique minimal-m representative.  Idempotent, and
/// normalize(embed(s)) == s on normalized s.
SemiInfiniteMonomial normalize(const SemiInfiniteMonomial& s, const HighestWeight& L);

struct ExtremalWeight {
  EpsVector classical;
  long long depth = 0;
  friend bool operator==(const ExtremalWeight&, const ExtremalWeight&) = default;
};

/// Weight of the m-th extremal vector relative to the highest weight vector,
/// fixed by telescoping: weight(head) + extremal_weight(m) is invariant
/// under embed.
ExtremalWeight extremal_weight(const HighestWeight& L, int m);

/// weight(head) + extremal_weight(m); conserved by embed and normalize.
WeightTag total_weight(const SemiInfiniteMonomial& s, const HighestWeight& L);

/// Text form "m=<int>; <monomial>"; exact round-trip.
std::string to_string(const SemiInfiniteMonomial& s);
SemiInfiniteMonomial parse_semi_infinite(const std::string& text, int ell);

}  // namespace cbasis

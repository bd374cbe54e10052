#pragma once

// Independent weight-multiplicity oracle for the standard module L(Lambda),
// via the affine Freudenthal recursion with exact integer arithmetic.
// Multiplicities are computed on dominant classical representatives only and
// transported along the signed-permutation Weyl group.

#include <map>
#include <vector>

#include "cbasis/cartan.hpp"
#include "cbasis/character.hpp"

namespace cbasis {

/// Weight of the affine algebra in (classical part, level, delta-depth)
/// coordinates; depth counts -delta relative to Lambda, so Lambda has depth 0
/// and delta itself has depth -1.
struct AffineWeight {
  EpsVector classical;
  int level = 0;
  long long depth = 0;
  friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
};

struct RootWithMult {
  EpsVector classical;  // zero for imaginary roots
  int depth = 0;        // n in alpha + n*delta
  int mult = 1;
};

/// Positive roots with depth <= max_depth: the classical positives at depth
/// 0, all classical roots at each depth n >= 1, and n*delta with
/// multiplicity ell.
std::vector<RootWithMult> positive_roots_up_to(int ell, int max_depth);

/// Affine Weyl vector: classical (ell, ell-1, ..., 1), level ell+1, depth 0.
AffineWeight rho(int ell);

/// Doubled pairing 2<u,v> in the coordinates above.
long long affine_pairing_x2(const AffineWeight& u, const AffineWeight& v);

class FreudenthalTable {
 public:
  explicit FreudenthalTable(HighestWeight L);

  /// Multiplicity of w in L(Lambda).  Weights outside the support give 0;
  /// depth < 0 gives 0; a level mismatch throws.
  long long multiplicity(const AffineWeight& w);

  /// All entries of positive multiplicity with depth <= max_depth,
  /// orbit-expanded over signed permutations.
  GradedCharacter table(int max_depth);

 private:
  long long mult_dominant(const EpsVector& mu, long long dep);
  bool in_cone(const EpsVector& mu, long long dep) const;
  long long norm2_shifted(const EpsVector& mu, long long dep) const;  // 2<w+rho, w+rho>

  HighestWeight lambda_;
  int ell_;
  int level_;
  EpsVector lam_classical_;
  EpsVector rho_classical_;
  long long lam_rho_norm2_;
  std::vector<RootWithMult> roots_;
  int roots_depth_ = -1;
  std::map<std::pair<long long, EpsVector>, long long> memo_;
};

long long weight_multiplicity(const HighestWeight& L, const AffineWeight& w);
GradedCharacter character_table(const HighestWeight& L, int max_depth);

}  // namespace cbasis

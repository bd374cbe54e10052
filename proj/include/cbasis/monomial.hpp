#pragma once

// The commutative monoid of monomials in the variables x_{ij}(n).  A monomial
// is kept in canonical form: factors sorted ascending left to right, so the
// rightmost (printed last) factor is the greatest.  Degrees are unrestricted
// integers; condition checkers, not the type, decide which degrees are
// admissible in a given context.

#include <compare>
#include <string>
#include <vector>

#include "cbasis/cartan.hpp"

namespace cbasis {

struct Variable {
  Color color;
  int degree = 0;
  friend bool operator==(const Variable&, const Variable&) = default;
};

/// x_a(n) < x_b(n') iff n < n', or n = n' and a < b.
inline std::strong_ordering cmp_variable(const Variable& a, const Variable& b) {
  if (auto c = a.degree <=> b.degree; c != std::strong_ordering::equal) return c;
  return cmp_color(a.color, b.color);
}

class Monomial {
 public:
  explicit Monomial(int ell);
  Monomial(int ell, std::vector<Variable> factors);

  int rank() const { return ell_; }
  const std::vector<Variable>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  int size() const { return static_cast<int>(factors_.size()); }

  /// -sum of degrees; nonnegative on monomials with all degrees <= -1.
  long long depth() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  int ell_;
  std::vector<Variable> factors_;
};

/// Lexicographic from the greatest (rightmost) factor down; on a right-aligned
/// tie the longer monomial is greater, so the empty monomial is the minimum.
/// This is the unique tie rule under which multiplication is monotone.
std::strong_ordering cmp_monomial(const Monomial& p, const Monomial& q);

inline bool operator<(const Monomial& p, const Monomial& q) {
  return cmp_monomial(p, q) == std::strong_ordering::less;
}

Monomial shift(const Monomial& p, int m);
Monomial multiply(const Monomial& p, const Monomial& q);

/// Multiset containment: every factor of `part` occurs in `whole` with at
/// least the same multiplicity.
bool divides(const Monomial& part, const Monomial& whole);
Monomial quotient(const Monomial& whole, const Monomial& part);

struct WeightTag {
  EpsVector classical;
  long long depth = 0;
  friend bool operator==(const WeightTag&, const WeightTag&) = default;
};

WeightTag weight(const Monomial& p);

/// Text form "x[i,j](n) x[i,j](n) ..."; the empty monomial prints as "1".
std::string to_string(const Monomial& p);

/// Accepts factors in any order and canonicalizes; throws std::invalid_argument
/// on malformed input.  parse(print(p)) == p on canonical forms.
Monomial parse_monomial(const std::string& text, int ell);

}  // namespace cbasis

#pragma once

// Exact arithmetic for the C_ell root system in epsilon-coordinates: the
// color triangle, the invariant form normalized so that <theta,theta> = 2,
// coroots and fundamental weights.  The form takes half-integer values on
// epsilon-vectors, so it is carried around in doubled form; everything here
// is plain integer arithmetic.

#include <compare>
#include <stdexcept>
#include <vector>

namespace cbasis {

using EpsVector = std::vector<int>;

inline EpsVector eps_zero(int ell) {
  if (ell < 1) throw std::invalid_argument("eps_zero: rank must be >= 1");
  return EpsVector(static_cast<size_t>(ell), 0);
}

inline EpsVector eps_add(const EpsVector& a, const EpsVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("eps_add: length mismatch");
  EpsVector r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline EpsVector eps_sub(const EpsVector& a, const EpsVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("eps_sub: length mismatch");
  EpsVector r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

/// Doubled invariant form: returns 2<u,v>.  With theta = 2 eps_1 this gives
/// bilinear_x2(theta, theta) = 4, i.e. <theta,theta> = 2.
inline long long bilinear_x2(const EpsVector& u, const EpsVector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("bilinear_x2: length mismatch");
  long long s = 0;
  for (size_t i = 0; i < u.size(); ++i) s += static_cast<long long>(u[i]) * v[i];
  return s;
}

/// Color (ij) = eps_i + eps_j; drawn in column i, row j of the triangle,
/// with 1 <= i <= j <= ell.
struct Color {
  int col = 0;
  int row = 0;
  // structural order for containers; the domain order is cmp_color
  friend auto operator<=>(const Color&, const Color&) = default;
};

/// Order on colors: (i'j') < (ij) iff i' > i, or i' = i and j' > j.
/// The maximum element is (1,1).
inline std::strong_ordering cmp_color(Color a, Color b) {
  if (auto c = b.col <=> a.col; c != std::strong_ordering::equal) return c;
  return b.row <=> a.row;
}

inline bool color_valid(Color c, int ell) {
  return 1 <= c.col && c.col <= c.row && c.row <= ell;
}

/// All ell(ell+1)/2 colors, strictly ascending.
inline std::vector<Color> colors(int ell) {
  if (ell < 1) throw std::invalid_argument("colors: rank must be >= 1");
  std::vector<Color> out;
  out.reserve(static_cast<size_t>(ell) * (ell + 1) / 2);
  for (int i = ell; i >= 1; --i)
    for (int j = ell; j >= i; --j) out.push_back({i, j});
  return out;
}

inline EpsVector color_weight(Color c, int ell) {
  if (!color_valid(c, ell)) throw std::invalid_argument("color_weight: color out of range");
  EpsVector w = eps_zero(ell);
  w[static_cast<size_t>(c.col) - 1] += 1;
  w[static_cast<size_t>(c.row) - 1] += 1;
  return w;
}

/// Coroot 2a/<a,a>.  Long roots +-2eps_i are self-dual, short roots
/// +-eps_i +- eps_j double.
inline EpsVector coroot(const EpsVector& alpha) {
  int nonzero = 0;
  bool is_long = false, is_short = false;
  for (int x : alpha) {
    if (x == 0) continue;
    ++nonzero;
    if (x == 2 || x == -2)
      is_long = true;
    else if (x == 1 || x == -1)
      is_short = true;
    else
      throw std::invalid_argument("coroot: not a root of C_l");
  }
  if (nonzero == 1 && is_long && !is_short) return alpha;
  if (nonzero == 2 && is_short && !is_long) {
    EpsVector r(alpha);
    for (int& x : r) x *= 2;
    return r;
  }
  throw std::invalid_argument("coroot: not a root of C_l");
}

/// omega_r = eps_1 + ... + eps_r; r = 0 gives the zero vector (Lambda_0).
inline EpsVector fundamental_weight(int r, int ell) {
  if (r < 0 || r > ell) throw std::invalid_argument("fundamental_weight: index out of range");
  EpsVector w = eps_zero(ell);
  for (int i = 0; i < r; ++i) w[static_cast<size_t>(i)] = 1;
  return w;
}

/// The minuscule weight omega = omega_ell.
inline EpsVector minuscule_omega(int ell) { return fundamental_weight(ell, ell); }

/// Dominant integral affine weight Lambda = k_0 Lambda_0 + ... + k_ell Lambda_ell,
/// stored as the coefficient vector (k_0, ..., k_ell).
struct HighestWeight {
  std::vector<int> k;

  explicit HighestWeight(std::vector<int> coeffs) : k(std::move(coeffs)) {
    if (k.size() < 2) throw std::invalid_argument("HighestWeight: need k_0..k_ell with ell >= 1");
    for (int c : k)
      if (c < 0) throw std::invalid_argument("HighestWeight: coefficients must be nonnegative");
  }

  int ell() const { return static_cast<int>(k.size()) - 1; }

  int level() const {
    int s = 0;
    for (int c : k) s += c;
    return s;
  }

  EpsVector classical() const {
    EpsVector w = eps_zero(ell());
    for (int r = 1; r <= ell(); ++r)
      for (int i = 0; i < r; ++i) w[static_cast<size_t>(i)] += k[static_cast<size_t>(r)];
    return w;
  }

  /// Fundamental indices r_1 >= r_2 >= ... with multiplicity, one per level.
  std::vector<int> parts() const {
    std::vector<int> p;
    for (int r = ell(); r >= 0; --r)
      for (int c = 0; c < k[static_cast<size_t>(r)]; ++c) p.push_back(r);
    return p;
  }
};

}  // namespace cbasis

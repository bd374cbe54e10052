#include "cbasis/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace cbasis {

std::vector<DiagonalPath> diagonal_paths(int ell, int row_floor) {
  if (ell < 1) throw std::invalid_argument("diagonal_paths: rank must be >= 1");
  if (row_floor < 0 || row_floor > ell) throw std::invalid_argument("diagonal_paths: row floor out of range");
  std::vector<DiagonalPath> out;
  std::vector<Color> acc;
  std::function<void(int, int)> rec = [&](int min_col, int min_row) {
    out.push_back({acc, acc.empty() ? 0 : acc.back().col});
    for (int i = min_col; i <= ell; ++i)
      for (int j = std::max(i, min_row); j <= ell; ++j) {
        acc.push_back({i, j});
        rec(i + 1, j + 1);
        acc.pop_back();
      }
  };
  rec(1, row_floor + 1);
  return out;
}

std::vector<Monomial> enumerate_level1(int r, int ell, int max_depth) {
  if (max_depth < 0) throw std::invalid_argument("enumerate_level1: depth bound must be >= 0");
  return enumerate_level1_tail(r, ell, 0, max_depth);
}

namespace {

// Exact bound on the per-degree occupancies of one admissible level-one
// monomial: interlocking gives c_e + c_{e-1} <= ell on adjacent degrees, and
// the top degree obeys c <= ell - r.  best_by_count[e][c] is the largest
// possible sum of e'*c_{e'} over degrees e' <= e given c_e = c.
std::vector<std::vector<long long>> occupancy_table(int ell, int top) {
  std::vector<std::vector<long long>> best;
  if (top < 0) return best;
  best.assign(static_cast<size_t>(top) + 1, std::vector<long long>(static_cast<size_t>(ell) + 1, 0));
  for (int e = 1; e <= top; ++e) {
    // prefix maxima of the previous row
    std::vector<long long> pref(best[static_cast<size_t>(e) - 1]);
    for (int c = 1; c <= ell; ++c) pref[static_cast<size_t>(c)] = std::max(pref[static_cast<size_t>(c)], pref[static_cast<size_t>(c) - 1]);
    for (int c = 0; c <= ell; ++c) {
      const int cap = (c >= 1) ? ell - c : ell;
      best[static_cast<size_t>(e)][static_cast<size_t>(c)] =
          static_cast<long long>(e) * c + pref[static_cast<size_t>(cap)];
    }
  }
  return best;
}

}  // namespace

/// Largest possible total degree of a level-one admissible monomial in the
/// 2m-shifted picture for target r; its negative is the least possible depth.
long long max_degree_sum(int r, int ell, int m) {
  if (m <= 0) return 0;
  const int top = 2 * m - 1;
  auto best = occupancy_table(ell, top);
  long long out = 0;
  for (int c = 0; c <= ell - r; ++c)
    out = std::max(out, best[static_cast<size_t>(top)][static_cast<size_t>(c)]);
  return out;
}

std::vector<Monomial> enumerate_level1_tail(int r, int ell, int m, long long max_depth) {
  if (ell < 1) throw std::invalid_argument("enumerate_level1_tail: rank must be >= 1");
  if (r < 0 || r > ell) throw std::invalid_argument("enumerate_level1_tail: target out of range");
  if (m < 0) throw std::invalid_argument("enumerate_level1_tail: tail index must be >= 0");

  std::vector<std::vector<DiagonalPath>> paths_by_floor;
  paths_by_floor.reserve(static_cast<size_t>(ell) + 1);
  for (int fl = 0; fl <= ell; ++fl) paths_by_floor.push_back(diagonal_paths(ell, fl));

  const int top = 2 * m - 1;
  std::vector<Monomial> out;
  std::vector<Variable> acc;

  // Largest possible total degree on the slice e, e-1, ..., 0 (any incoming
  // row floor only shrinks it, so this is a safe pruning estimate).
  const auto occ = occupancy_table(ell, top);
  std::vector<long long> best_below(occ.size(), 0);
  for (size_t e = 0; e < occ.size(); ++e)
    for (long long v : occ[e]) best_below[e] = std::max(best_below[e], v);

  // Degree by degree from the top down.  The row floor at a degree is the
  // previous degree's largest column when that degree is occupied, and the
  // slot target r at the top degree.
  std::function<void(int, int, long long)> rec = [&](int deg, int floor, long long depth) {
    if (deg <= -1) {
      // every further factor costs at least -deg
      if (depth + static_cast<long long>(-deg) > max_depth) {
        if (depth <= max_depth) out.emplace_back(ell, acc);
        return;
      }
    } else {
      if (depth - best_below[static_cast<size_t>(deg)] > max_depth) return;
    }
    for (const DiagonalPath& path : paths_by_floor[static_cast<size_t>(floor)]) {
      for (const Color& c : path.cells) acc.push_back({c, deg});
      rec(deg - 1, path.cells.empty() ? 0 : path.max_column,
          depth - static_cast<long long>(deg) * static_cast<long long>(path.cells.size()));
      acc.resize(acc.size() - path.cells.size());
    }
  };
  rec(top, r, 0);

  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> enumerate_level_k(const HighestWeight& L, int m, long long max_depth) {
  if (L.level() < 1) throw std::invalid_argument("enumerate_level_k: level must be >= 1");
  if (m < 0) throw std::invalid_argument("enumerate_level_k: tail index must be >= 0");
  const int ell = L.ell();
  const int k = L.level();
  const std::vector<int> targets = L.parts();

  // least possible depth of each slot's monomial in the 2m-shifted picture,
  // from the exact occupancy bound; the caps on the other slots follow
  std::vector<long long> slot_min(static_cast<size_t>(k));
  long long total_min = 0;
  for (int s = 0; s < k; ++s) {
    slot_min[static_cast<size_t>(s)] = -max_degree_sum(targets[static_cast<size_t>(s)], ell, m);
    total_min += slot_min[static_cast<size_t>(s)];
  }

  std::vector<std::vector<Monomial>> lists(static_cast<size_t>(k));
  for (int s = 0; s < k; ++s) {
    if (s > 0 && targets[static_cast<size_t>(s)] == targets[static_cast<size_t>(s - 1)]) {
      lists[static_cast<size_t>(s)] = lists[static_cast<size_t>(s - 1)];
      continue;
    }
    const long long cap = max_depth - (total_min - slot_min[static_cast<size_t>(s)]);
    lists[static_cast<size_t>(s)] = enumerate_level1_tail(targets[static_cast<size_t>(s)], ell, m, cap);
    // sort by depth so the product recursion can cut off early
    std::stable_sort(lists[static_cast<size_t>(s)].begin(), lists[static_cast<size_t>(s)].end(),
                     [](const Monomial& a, const Monomial& b) { return a.depth() < b.depth(); });
  }

  std::vector<long long> min_after(static_cast<size_t>(k) + 1, 0);
  for (int s = k - 1; s >= 0; --s)
    min_after[static_cast<size_t>(s)] = min_after[static_cast<size_t>(s) + 1] + slot_min[static_cast<size_t>(s)];

  std::set<Monomial> found;
  Monomial acc(ell);
  std::function<void(int, size_t, long long)> rec = [&](int s, size_t start, long long depth) {
    if (s == k) {
      found.insert(acc);
      return;
    }
    const long long remaining_min = min_after[static_cast<size_t>(s) + 1];
    const bool same_as_prev = s > 0 && targets[static_cast<size_t>(s)] == targets[static_cast<size_t>(s - 1)];
    const auto& list = lists[static_cast<size_t>(s)];
    for (size_t i = same_as_prev ? start : 0; i < list.size(); ++i) {
      const long long d = depth + list[i].depth();
      if (d + remaining_min > max_depth) break;  // lists are depth-sorted
      Monomial saved = acc;
      acc = multiply(acc, list[i]);
      rec(s + 1, i, d);
      acc = std::move(saved);
    }
  };
  rec(0, 0, 0);

  std::vector<Monomial> out(found.begin(), found.end());
  for (const Monomial& p : out)
    if (!check_dc_ic_level_k(p, L, m))
      throw std::logic_error("enumerate_level_k: generated monomial fails the admissibility check");
  return out;
}

SemiInfiniteBasis enumerate_semi_infinite(const HighestWeight& L, int max_depth) {
  if (max_depth < 0) throw std::invalid_argument("enumerate_semi_infinite: depth bound must be >= 0");
  if (L.level() < 1) throw std::invalid_argument("enumerate_semi_infinite: level must be >= 1");

  // two extra sweeps so the unchanged-census rule can confirm stabilization
  const int cap = max_depth + L.level() * L.ell() + 2;
  GradedCharacter prev1, prev2;
  std::vector<Monomial> heads;
  int final_m = -1;
  for (int M = 0; M <= cap; ++M) {
    const ExtremalWeight ext = extremal_weight(L, M);
    std::vector<Monomial> cur = enumerate_level_k(L, M, max_depth - ext.depth);
    GradedCharacter census;
    for (const Monomial& h : cur) {
      WeightTag w = weight(h);
      const long long total = w.depth + ext.depth;
      if (total < 0)
        throw std::logic_error("enumerate_semi_infinite: monomial above the highest weight");
      census.add(total, eps_add(w.classical, ext.classical));
    }
    if (M >= 2 && census == prev1 && prev1 == prev2) {
      heads = std::move(cur);
      final_m = M;
      break;
    }
    prev2 = std::move(prev1);
    prev1 = std::move(census);
  }
  if (final_m < 0) throw std::logic_error("enumerate_semi_infinite: tail sweep did not stabilize");

  SemiInfiniteBasis out;
  out.tail_sweeps = final_m;
  out.census = prev1;
  for (Monomial& h : heads) {
    SemiInfiniteMonomial s = normalize({final_m, std::move(h)}, L);
    out.items.push_back(std::move(s));
  }
  std::sort(out.items.begin(), out.items.end(), [](const SemiInfiniteMonomial& a, const SemiInfiniteMonomial& b) {
    if (a.m != b.m) return a.m < b.m;
    return a.head < b.head;
  });
  // conservation cross-check: the canonical forms carry the same census
  GradedCharacter check;
  for (const SemiInfiniteMonomial& s : out.items) {
    WeightTag w = total_weight(s, L);
    check.add(w.depth, w.classical);
  }
  if (!(check == out.census))
    throw std::logic_error("enumerate_semi_infinite: weight not conserved by normalization");
  return out;
}

}  // namespace cbasis

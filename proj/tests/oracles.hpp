#pragma once

// Test-only oracles: brute-force counters and generators kept independent of
// the library code paths they check.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "cbasis/cartan.hpp"
#include "cbasis/monomial.hpp"

namespace testutil {

// Number of partitions of n (parts >= 1, unrestricted).
inline long long partitions(int n) {
  if (n < 0) return 0;
  std::vector<long long> p(static_cast<size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s) p[static_cast<size_t>(s)] += p[static_cast<size_t>(s - part)];
  return p[static_cast<size_t>(n)];
}

// Number of partitions of n into parts >= 1 with successive parts differing
// by at least 2 (Rogers-Ramanujan count), by direct recursion.
inline long long partitions_min_diff2(int n, int min_part = 1) {
  if (n < 0) return 0;
  if (n == 0) return 1;
  long long total = 0;
  for (int part = min_part; part <= n; ++part) total += partitions_min_diff2(n - part, part + 2);
  return total;
}

// All monomials (multisets of variables, repeats allowed) with degrees <= -1
// and depth <= max_depth.
inline std::vector<cbasis::Monomial> all_monomials(int ell, int max_depth) {
  std::vector<cbasis::Variable> vars;
  for (int d = -1; d >= -max_depth; --d)
    for (const cbasis::Color& c : cbasis::colors(ell)) vars.push_back({c, d});
  std::vector<cbasis::Monomial> out;
  std::vector<cbasis::Variable> acc;
  // choose multiplicities over the variable list, budgeted by depth
  auto rec = [&](auto&& self, size_t idx, int budget) -> void {
    out.emplace_back(ell, acc);
    for (size_t i = idx; i < vars.size(); ++i) {
      int cost = -vars[i].degree;
      if (cost > budget) continue;
      acc.push_back(vars[i]);
      self(self, i, budget - cost);
      acc.pop_back();
    }
  };
  rec(rec, 0, max_depth);
  return out;
}

// Diagonal-path predicate on a set of colors, checked from the definition.
inline bool is_diagonal_path(std::vector<cbasis::Color> cells, int row_floor) {
  std::sort(cells.begin(), cells.end(),
            [](cbasis::Color a, cbasis::Color b) { return a.col < b.col || (a.col == b.col && a.row < b.row); });
  for (size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].row <= row_floor) return false;
    if (i > 0 && !(cells[i].col > cells[i - 1].col && cells[i].row > cells[i - 1].row)) return false;
  }
  return true;
}

// All diagonal paths by filtering subsets of the color triangle.
inline std::set<std::vector<cbasis::Color>> brute_diagonal_paths(int ell, int row_floor) {
  auto cols = cbasis::colors(ell);
  std::set<std::vector<cbasis::Color>> out;
  size_t n = cols.size();
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    std::vector<cbasis::Color> sub;
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t{1} << i)) sub.push_back(cols[i]);
    if (is_diagonal_path(sub, row_floor)) {
      std::sort(sub.begin(), sub.end(),
                [](cbasis::Color a, cbasis::Color b) { return a.col < b.col; });
      out.insert(sub);
    }
  }
  return out;
}

inline cbasis::Monomial random_monomial(std::mt19937& rng, int ell, int max_factors, int min_degree,
                                        int max_degree = -1) {
  auto cols = cbasis::colors(ell);
  std::uniform_int_distribution<int> nf(0, max_factors);
  std::uniform_int_distribution<int> dc(min_degree, max_degree);
  std::uniform_int_distribution<size_t> cc(0, cols.size() - 1);
  std::vector<cbasis::Variable> f;
  int n = nf(rng);
  for (int i = 0; i < n; ++i) f.push_back({cols[cc(rng)], dc(rng)});
  return cbasis::Monomial(ell, std::move(f));
}

// Weight census of the exterior power of the gl_ell vector representation:
// one weight per r-element subset of {1..ell}.
inline std::map<std::pair<long long, cbasis::EpsVector>, long long> wedge_census(int ell, int r) {
  std::map<std::pair<long long, cbasis::EpsVector>, long long> out;
  std::vector<int> pick(static_cast<size_t>(r));
  auto rec = [&](auto&& self, int start, int depthLeft) -> void {
    if (depthLeft == 0) {
      cbasis::EpsVector w = cbasis::eps_zero(ell);
      for (int i : pick) w[static_cast<size_t>(i) - 1] = 1;
      out[{0, w}] += 1;
      return;
    }
    for (int i = start; i <= ell; ++i) {
      pick[static_cast<size_t>(r - depthLeft)] = i;
      self(self, i + 1, depthLeft - 1);
    }
  };
  rec(rec, 1, r);
  if (r == 0) out[{0, cbasis::eps_zero(ell)}] = 1;
  return out;
}

}  // namespace testutil

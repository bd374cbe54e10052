#include "cbasis/conditions.hpp"

#include <functional>
#include <stdexcept>

namespace cbasis {

bool check_dc_level1(const Monomial& p) {
  const auto& f = p.factors();  // ascending; factors of equal degree are contiguous
  bool have_prev = false;
  int prev_deg = 0, prev_maxcol = 0;
  size_t hi = f.size();
  while (hi > 0) {
    const int deg = f[hi - 1].degree;
    size_t lo = hi;
    while (lo > 0 && f[lo - 1].degree == deg) --lo;
    // walk the degree group in ascending column order (reverse of storage)
    int last_col = 0, last_row = 0, min_row = 0;
    for (size_t t = hi; t-- > lo;) {
      const Color c = f[t].color;
      if (last_col != 0) {
        if (!(c.col > last_col && c.row > last_row)) return false;
      } else {
        min_row = c.row;
      }
      last_col = c.col;
      last_row = c.row;
    }
    if (have_prev && prev_deg == deg + 1 && !(min_row > prev_maxcol)) return false;
    have_prev = true;
    prev_deg = deg;
    prev_maxcol = last_col;
    hi = lo;
  }
  return true;
}

bool check_ic_level1(const Monomial& p, int r) {
  if (r < 0 || r > p.rank()) throw std::invalid_argument("check_ic_level1: target out of range");
  for (const Variable& v : p.factors())
    if (v.degree == -1 && v.color.row <= r) return false;
  return true;
}

bool ic_via_dc(const Monomial& p, int r) {
  if (r < 1 || r > p.rank()) throw std::invalid_argument("ic_via_dc: target must be in 1..ell");
  Monomial appended = multiply(p, Monomial(p.rank(), {Variable{{r, p.rank()}, 0}}));
  return check_dc_level1(appended);
}

bool check_ic_shifted(const Monomial& p, int r, int m) {
  if (r < 0 || r > p.rank()) throw std::invalid_argument("check_ic_shifted: target out of range");
  for (const Variable& v : p.factors()) {
    const int d = v.degree + 2 * m;
    if (d >= 0) return false;
    if (d == -1 && v.color.row <= r) return false;
  }
  return true;
}

namespace {

struct SlotState {
  bool used = false;
  int cur_deg = 0;
  int last_col = 0;
  int last_row = 0;
  int row_floor = 0;
};

}  // namespace

std::optional<Factorization> check_dc_ic_level_k(const Monomial& p, const HighestWeight& L, int m) {
  if (L.ell() != p.rank()) throw std::invalid_argument("check_dc_ic_level_k: rank mismatch");
  if (L.level() < 1) throw std::invalid_argument("check_dc_ic_level_k: level must be >= 1");
  if (m < 0) throw std::invalid_argument("check_dc_ic_level_k: shift index must be >= 0");
  const std::vector<int> targets = L.parts();
  const int k = L.level();
  const int top = 2 * m - 1;
  const auto& f = p.factors();
  for (const Variable& v : f)
    if (v.degree > top) return std::nullopt;

  std::vector<SlotState> slots(static_cast<size_t>(k));
  std::vector<int> assign(f.size(), -1);

  // factors processed from the greatest down; within a slot they arrive with
  // nonincreasing degree and, at a fixed degree, strictly ascending column
  std::function<bool(int)> rec = [&](int idx) -> bool {
    if (idx < 0) return true;
    const Variable v = f[static_cast<size_t>(idx)];
    for (int s = 0; s < k; ++s) {
      SlotState& S = slots[static_cast<size_t>(s)];
      if (!S.used && s > 0 && !slots[static_cast<size_t>(s - 1)].used &&
          targets[static_cast<size_t>(s - 1)] == targets[static_cast<size_t>(s)])
        continue;  // identical empty slots, fill the first one only
      int floor;
      if (!S.used) {
        floor = (v.degree == top) ? targets[static_cast<size_t>(s)] : 0;
        if (!(v.color.row > floor)) continue;
      } else if (v.degree == S.cur_deg) {
        if (!(v.color.col > S.last_col && v.color.row > S.last_row && v.color.row > S.row_floor)) continue;
        floor = S.row_floor;
      } else {
        floor = (v.degree == S.cur_deg - 1) ? S.last_col : 0;
        if (!(v.color.row > floor)) continue;
      }
      const SlotState saved = S;
      S = SlotState{true, v.degree, v.color.col, v.color.row, floor};
      assign[static_cast<size_t>(idx)] = s;
      if (rec(idx - 1)) return true;
      S = saved;
      assign[static_cast<size_t>(idx)] = -1;
    }
    return false;
  };

  if (!rec(static_cast<int>(f.size()) - 1)) return std::nullopt;
  return Factorization{assign, targets};
}

bool brute_force_level_k(const Monomial& p, const HighestWeight& L, int m) {
  if (L.ell() != p.rank()) throw std::invalid_argument("brute_force_level_k: rank mismatch");
  if (L.level() < 1) throw std::invalid_argument("brute_force_level_k: level must be >= 1");
  if (m < 0) throw std::invalid_argument("brute_force_level_k: shift index must be >= 0");
  const int t = p.size();
  if (t > 16) throw std::invalid_argument("brute_force_level_k: factor-count guard exceeded");
  const std::vector<int> targets = L.parts();
  const int k = L.level();

  std::vector<int> pick(static_cast<size_t>(t), 0);
  while (true) {
    bool ok = true;
    for (int s = 0; s < k && ok; ++s) {
      std::vector<Variable> sub;
      for (int i = 0; i < t; ++i)
        if (pick[static_cast<size_t>(i)] == s) sub.push_back(p.factors()[static_cast<size_t>(i)]);
      Monomial piece(p.rank(), std::move(sub));
      ok = check_dc_level1(piece) && check_ic_shifted(piece, targets[static_cast<size_t>(s)], -m);
    }
    if (ok) return true;
    int i = 0;
    while (i < t && pick[static_cast<size_t>(i)] == k - 1) pick[static_cast<size_t>(i++)] = 0;
    if (i == t) return false;
    ++pick[static_cast<size_t>(i)];
  }
}

}  // namespace cbasis

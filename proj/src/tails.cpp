#include "cbasis/tails.hpp"

#include <sstream>
#include <stdexcept>

namespace cbasis {

Monomial nu(int r, int ell) {
  if (r < 0 || r > ell) throw std::invalid_argument("nu: index out of range");
  std::vector<Variable> f;
  for (int s = 1; s <= ell - r; ++s) f.push_back({{s, r + s}, -1});
  return Monomial(ell, std::move(f));
}

Monomial mu(int r, int ell) {
  if (r < 0 || r > ell) throw std::invalid_argument("mu: index out of range");
  return multiply(shift(nu(ell - r, ell), -1), nu(r, ell));
}

Monomial mu_lambda(const HighestWeight& L) {
  if (L.level() < 1) throw std::invalid_argument("mu_lambda: level must be >= 1");
  Monomial out(L.ell());
  for (int r : L.parts()) out = multiply(out, mu(r, L.ell()));
  return out;
}

Monomial tail_block(const HighestWeight& L, int j) {
  if (j < 1) throw std::invalid_argument("tail_block: block index must be >= 1");
  return shift(mu_lambda(L), 2 * j);
}

bool satisfies_dc_ic(const SemiInfiniteMonomial& s, const HighestWeight& L) {
  if (s.m < 0) return false;
  return check_dc_ic_level_k(s.head, L, s.m).has_value();
}

SemiInfiniteMonomial embed(const SemiInfiniteMonomial& s, const HighestWeight& L) {
  return {s.m + 1, multiply(s.head, tail_block(L, s.m + 1))};
}

SemiInfiniteMonomial normalize(const SemiInfiniteMonomial& s, const HighestWeight& L) {
  SemiInfiniteMonomial cur = s;
  while (cur.m >= 1) {
    Monomial tb = tail_block(L, cur.m);
    if (!divides(tb, cur.head)) break;
    Monomial rem = quotient(cur.head, tb);
    if (!check_dc_ic_level_k(rem, L, cur.m - 1).has_value()) break;
    cur = {cur.m - 1, std::move(rem)};
  }
  return cur;
}

ExtremalWeight extremal_weight(const HighestWeight& L, int m) {
  if (m < 0) throw std::invalid_argument("extremal_weight: tail index must be >= 0");
  ExtremalWeight w{L.classical(), 0};
  for (int j = 1; j <= m; ++j) {
    WeightTag tb = weight(tail_block(L, j));
    w.classical = eps_sub(w.classical, tb.classical);
    w.depth -= tb.depth;
  }
  return w;
}

WeightTag total_weight(const SemiInfiniteMonomial& s, const HighestWeight& L) {
  WeightTag h = weight(s.head);
  ExtremalWeight e = extremal_weight(L, s.m);
  return {eps_add(h.classical, e.classical), h.depth + e.depth};
}

std::string to_string(const SemiInfiniteMonomial& s) {
  std::ostringstream os;
  os << "m=" << s.m << "; " << to_string(s.head);
  return os.str();
}

SemiInfiniteMonomial parse_semi_infinite(const std::string& text, int ell) {
  const size_t semi = text.find(';');
  if (semi == std::string::npos || text.rfind("m=", 0) != 0)
    throw std::invalid_argument("parse_semi_infinite: expected \"m=<int>; <monomial>\"");
  int m;
  try {
    size_t used = 0;
    m = std::stoi(text.substr(2, semi - 2), &used);
    if (used != semi - 2) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_semi_infinite: bad tail index");
  }
  return {m, parse_monomial(text.substr(semi + 1), ell)};
}

}  // namespace cbasis

#include "cbasis/freudenthal.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <stdexcept>

namespace cbasis {

std::vector<RootWithMult> positive_roots_up_to(int ell, int max_depth) {
  if (ell < 1) throw std::invalid_argument("positive_roots_up_to: rank must be >= 1");
  if (max_depth < 0) throw std::invalid_argument("positive_roots_up_to: depth bound must be >= 0");
  std::vector<EpsVector> classical_pos;
  for (int i = 1; i <= ell; ++i) {
    EpsVector lng = eps_zero(ell);
    lng[static_cast<size_t>(i) - 1] = 2;
    classical_pos.push_back(lng);
    for (int j = i + 1; j <= ell; ++j) {
      EpsVector d = eps_zero(ell), s = eps_zero(ell);
      d[static_cast<size_t>(i) - 1] = 1;
      d[static_cast<size_t>(j) - 1] = -1;
      s[static_cast<size_t>(i) - 1] = 1;
      s[static_cast<size_t>(j) - 1] = 1;
      classical_pos.push_back(d);
      classical_pos.push_back(s);
    }
  }
  std::vector<RootWithMult> out;
  for (const EpsVector& a : classical_pos) out.push_back({a, 0, 1});
  for (int n = 1; n <= max_depth; ++n) {
    for (const EpsVector& a : classical_pos) {
      out.push_back({a, n, 1});
      EpsVector neg(a);
      for (int& x : neg) x = -x;
      out.push_back({neg, n, 1});
    }
    out.push_back({eps_zero(ell), n, ell});
  }
  return out;
}

AffineWeight rho(int ell) {
  if (ell < 1) throw std::invalid_argument("rho: rank must be >= 1");
  EpsVector c = eps_zero(ell);
  for (int i = 0; i < ell; ++i) c[static_cast<size_t>(i)] = ell - i;
  return {c, ell + 1, 0};
}

long long affine_pairing_x2(const AffineWeight& u, const AffineWeight& v) {
  return bilinear_x2(u.classical, v.classical) -
         2 * (static_cast<long long>(u.level) * v.depth + static_cast<long long>(v.level) * u.depth);
}

FreudenthalTable::FreudenthalTable(HighestWeight L)
    : lambda_(std::move(L)),
      ell_(lambda_.ell()),
      level_(lambda_.level()),
      lam_classical_(lambda_.classical()),
      rho_classical_(rho(ell_).classical) {
  lam_rho_norm2_ = norm2_shifted(lam_classical_, 0);
}

long long FreudenthalTable::norm2_shifted(const EpsVector& mu, long long dep) const {
  EpsVector v = eps_add(mu, rho_classical_);
  // level of w + rho is level_ + h^vee with h^vee = ell + 1
  return bilinear_x2(v, v) - 4 * static_cast<long long>(level_ + ell_ + 1) * dep;
}

bool FreudenthalTable::in_cone(const EpsVector& mu, long long dep) const {
  if (dep < 0) return false;
  // Lambda - w = dep * alpha_0 + sum n_i alpha_i requires
  // sum n_i alpha_i = Lambda_cl - mu + dep * theta with all n_i >= 0 integer.
  std::vector<long long> v(static_cast<size_t>(ell_));
  for (int i = 0; i < ell_; ++i)
    v[static_cast<size_t>(i)] = static_cast<long long>(lam_classical_[static_cast<size_t>(i)]) -
                                mu[static_cast<size_t>(i)] + (i == 0 ? 2 * dep : 0);
  long long prev = 0;
  for (int i = 0; i < ell_ - 1; ++i) {
    prev += v[static_cast<size_t>(i)];
    if (prev < 0) return false;
  }
  const long long last = prev + v[static_cast<size_t>(ell_) - 1];
  return last >= 0 && last % 2 == 0;
}

long long FreudenthalTable::multiplicity(const AffineWeight& w) {
  if (w.level != level_) throw std::invalid_argument("multiplicity: level does not match Lambda");
  if (static_cast<int>(w.classical.size()) != ell_)
    throw std::invalid_argument("multiplicity: rank mismatch");
  if (w.depth < 0) return 0;
  EpsVector dom = w.classical;
  for (int& x : dom) x = std::abs(x);
  std::sort(dom.begin(), dom.end(), std::greater<int>());
  return mult_dominant(dom, w.depth);
}

long long FreudenthalTable::mult_dominant(const EpsVector& mu, long long dep) {
  const std::pair<long long, EpsVector> key{dep, mu};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  long long result = 0;
  if (mu == lam_classical_ && dep == 0) {
    result = 1;
  } else if (!in_cone(mu, dep) || norm2_shifted(mu, dep) >= lam_rho_norm2_) {
    // weights of L(Lambda) other than Lambda have |w+rho|^2 < |Lambda+rho|^2
    result = 0;
  } else {
    if (roots_depth_ < dep) {
      roots_ = positive_roots_up_to(ell_, static_cast<int>(dep));
      roots_depth_ = static_cast<int>(dep);
    }
    long long sum = 0;  // sum over roots of mult(alpha) * mult(w+j a) * 2<w+j a, a>
    for (const RootWithMult& a : roots_) {
      if (a.depth > dep) continue;
      for (long long j = 1;; ++j) {
        const long long dj = dep - j * a.depth;
        if (dj < 0) break;
        EpsVector cj(mu);
        for (int i = 0; i < ell_; ++i) cj[static_cast<size_t>(i)] += static_cast<int>(j) * a.classical[static_cast<size_t>(i)];
        const long long mj = multiplicity({cj, level_, dj});
        if (mj > 0) {
          // 2<w_j, alpha> with alpha = abar + n*delta
          const long long pair2 = bilinear_x2(cj, a.classical) + 2LL * level_ * a.depth;
          sum += static_cast<long long>(a.mult) * mj * pair2;
        } else if (a.depth == 0) {
          // classical string: once past the norm bound and moving outward,
          // every later term vanishes
          EpsVector cr = eps_add(cj, rho_classical_);
          if (norm2_shifted(cj, dj) > lam_rho_norm2_ && bilinear_x2(cr, a.classical) >= 0) break;
        }
        if (j > 100000) throw std::logic_error("mult_dominant: runaway root string");
      }
    }
    const long long denom = lam_rho_norm2_ - norm2_shifted(mu, dep);
    if (denom <= 0) throw std::logic_error("mult_dominant: nonpositive Freudenthal denominator");
    const long long numer = 2 * sum;
    if (numer % denom != 0 || numer / denom < 0)
      throw std::logic_error("mult_dominant: inconsistent Freudenthal step");
    result = numer / denom;
  }
  memo_[key] = result;
  return result;
}

namespace {

// all distinct signed permutations of a dominant vector
std::set<EpsVector> signed_orbit(const EpsVector& dom) {
  EpsVector sorted(dom);
  std::sort(sorted.begin(), sorted.end());
  std::set<EpsVector> orbit;
  do {
    const size_t n = sorted.size();
    std::vector<size_t> nz;
    for (size_t i = 0; i < n; ++i)
      if (sorted[i] != 0) nz.push_back(i);
    for (size_t mask = 0; mask < (size_t{1} << nz.size()); ++mask) {
      EpsVector v(sorted);
      for (size_t b = 0; b < nz.size(); ++b)
        if (mask & (size_t{1} << b)) v[nz[b]] = -v[nz[b]];
      orbit.insert(v);
    }
  } while (std::next_permutation(sorted.begin(), sorted.end()));
  return orbit;
}

}  // namespace

GradedCharacter FreudenthalTable::table(int max_depth) {
  if (max_depth < 0) throw std::invalid_argument("table: depth bound must be >= 0");
  GradedCharacter out;
  for (long long dep = 0; dep <= max_depth; ++dep) {
    const long long bound2 = lam_rho_norm2_ + 4 * static_cast<long long>(level_ + ell_ + 1) * dep;
    // dominant candidates mu_1 >= ... >= mu_ell >= 0 with |mu+rho|^2 < bound
    EpsVector mu = eps_zero(ell_);
    std::function<void(int, long long)> gen = [&](int pos, long long used2) {
      if (pos == ell_) {
        const long long m = mult_dominant(mu, dep);
        if (m > 0) {
          if (!in_cone(mu, dep)) throw std::logic_error("table: emitted weight outside the support cone");
          for (const EpsVector& v : signed_orbit(mu)) out.add(dep, v, m);
        }
        return;
      }
      long long rest = 0;
      for (int u = pos + 1; u < ell_; ++u) {
        const long long ru = ell_ - u;
        rest += ru * ru;
      }
      const int hi = pos == 0 ? 1 << 20 : mu[static_cast<size_t>(pos) - 1];
      for (int v = 0; v <= hi; ++v) {
        const long long c = v + (ell_ - pos);
        const long long t2 = used2 + c * c;
        // nonstrict: the highest weight itself sits on the norm boundary
        if (t2 + rest > bound2) break;
        mu[static_cast<size_t>(pos)] = v;
        gen(pos + 1, t2);
      }
      mu[static_cast<size_t>(pos)] = 0;
    };
    gen(0, 0);
  }
  return out;
}

long long weight_multiplicity(const HighestWeight& L, const AffineWeight& w) {
  FreudenthalTable t(L);
  return t.multiplicity(w);
}

GradedCharacter character_table(const HighestWeight& L, int max_depth) {
  FreudenthalTable t(L);
  return t.table(max_depth);
}

}  // namespace cbasis

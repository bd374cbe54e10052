#pragma once

// Graded census: counts indexed by (delta-depth, classical weight).

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cbasis/cartan.hpp"
#include "cbasis/monomial.hpp"

namespace cbasis {

class GradedCharacter {
 public:
  using Key = std::pair<long long, EpsVector>;

  void add(long long depth, const EpsVector& mu, long long count = 1) {
    if (depth < 0) throw std::invalid_argument("GradedCharacter: negative depth");
    if (count <= 0) throw std::invalid_argument("GradedCharacter: count must be positive");
    entries_[{depth, mu}] += count;
  }

  long long count(long long depth, const EpsVector& mu) const {
    auto it = entries_.find({depth, mu});
    return it == entries_.end() ? 0 : it->second;
  }

  const std::map<Key, long long>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }

  std::map<long long, long long> totals_by_depth() const {
    std::map<long long, long long> t;
    for (const auto& [key, c] : entries_) t[key.first] += c;
    return t;
  }

  friend bool operator==(const GradedCharacter&, const GradedCharacter&) = default;

 private:
  std::map<Key, long long> entries_;
};

inline GradedCharacter graded_character(const std::vector<WeightTag>& items) {
  GradedCharacter g;
  for (const WeightTag& w : items) g.add(w.depth, w.classical);
  return g;
}

/// First key where the two censuses disagree, in (depth, lex mu) order.
inline std::optional<GradedCharacter::Key> first_mismatch(const GradedCharacter& a, const GradedCharacter& b) {
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  while (ia != a.entries().end() || ib != b.entries().end()) {
    if (ia == a.entries().end()) return ib->first;
    if (ib == b.entries().end()) return ia->first;
    if (ia->first != ib->first) return std::min(ia->first, ib->first);
    if (ia->second != ib->second) return ia->first;
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

/// Depth at which the per-depth totals first decrease (heuristic flag only).
inline std::optional<long long> first_total_decrease(const GradedCharacter& g) {
  auto totals = g.totals_by_depth();
  long long prev = -1;
  bool have_prev = false;
  for (const auto& [d, c] : totals) {
    if (have_prev && d >= 1 && c < prev) return d;
    prev = c;
    have_prev = true;
  }
  return std::nullopt;
}

}  // namespace cbasis

#include "cbasis/conditions.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace cbasis;

namespace {
Monomial mon(int ell, std::initializer_list<Variable> vs) { return Monomial(ell, std::vector<Variable>(vs)); }
}  // namespace

TEST_CASE("difference conditions, single and adjacent degrees") {
  CHECK(check_dc_level1(mon(2, {{{2, 2}, -1}, {{1, 1}, -1}})));       // diagonal path (1,1),(2,2)
  CHECK_FALSE(check_dc_level1(mon(2, {{{1, 2}, -1}, {{1, 1}, -1}}))); // columns 1,1 not strict
  CHECK_FALSE(check_dc_level1(mon(2, {{{1, 1}, -2}, {{2, 2}, -1}}))); // row 1 at -2 not above column 2
  CHECK(check_dc_level1(mon(2, {{{2, 2}, -2}, {{1, 1}, -1}})));       // row 2 > column 1
  CHECK(check_dc_level1(Monomial(2)));
  // rank 1: adjacent degrees can never both be occupied
  for (int n = 1; n <= 5; ++n) {
    CHECK_FALSE(check_dc_level1(mon(1, {{{1, 1}, -n - 1}, {{1, 1}, -n}})));
    CHECK(check_dc_level1(mon(1, {{{1, 1}, -n - 2}, {{1, 1}, -n}})));
  }
  // a skipped degree imposes no cross constraint
  CHECK(check_dc_level1(mon(2, {{{1, 1}, -3}, {{2, 2}, -1}})));
  // repeated variable fails the within-degree path
  CHECK_FALSE(check_dc_level1(mon(2, {{{1, 2}, -1}, {{1, 2}, -1}})));
}

TEST_CASE("difference conditions are shift invariant") {
  std::mt19937 rng(21);
  for (int it = 0; it < 300; ++it) {
    Monomial p = testutil::random_monomial(rng, 3, 5, -5);
    bool dc = check_dc_level1(p);
    for (int m : {-3, 1, 2, 7}) CHECK(check_dc_level1(shift(p, m)) == dc);
  }
}

TEST_CASE("initial conditions") {
  CHECK_FALSE(check_ic_level1(mon(2, {{{1, 1}, -1}}), 1));
  CHECK(check_ic_level1(mon(2, {{{1, 2}, -1}}), 1));
  CHECK(check_ic_level1(mon(2, {{{1, 1}, -2}}), 2));  // only degree -1 is constrained
  std::mt19937 rng(5);
  for (int it = 0; it < 100; ++it)
    CHECK(check_ic_level1(testutil::random_monomial(rng, 2, 4, -4), 0));
}

TEST_CASE("ic_via_dc") {
  CHECK_FALSE(ic_via_dc(mon(2, {{{1, 1}, -1}}), 1));
  CHECK(ic_via_dc(mon(2, {{{1, 2}, -1}}), 1));
  CHECK(ic_via_dc(Monomial(2), 2));
  CHECK_THROWS_AS(ic_via_dc(Monomial(2), 0), std::invalid_argument);
  // the r = 2 case that pins the appended factor's column to r
  CHECK_FALSE(ic_via_dc(mon(2, {{{1, 2}, -1}}), 2));
}

TEST_CASE("ic_via_dc agrees with dc && ic on negative-degree monomials") {
  for (int ell = 1; ell <= 2; ++ell)
    for (const Monomial& p : testutil::all_monomials(ell, 4))
      for (int r = 1; r <= ell; ++r) {
        CAPTURE(to_string(p));
        CAPTURE(r);
        REQUIRE(ic_via_dc(p, r) == (check_dc_level1(p) && check_ic_level1(p, r)));
      }
}

TEST_CASE("shifted initial conditions") {
  // m = 0 is the plain negative-degree IC
  CHECK(check_ic_shifted(mon(2, {{{1, 2}, -1}}), 1, 0));
  CHECK_FALSE(check_ic_shifted(mon(2, {{{1, 1}, -1}}), 1, 0));
  CHECK_FALSE(check_ic_shifted(mon(2, {{{1, 1}, 0}}), 0, 0));
  // spec'd m = 1 cases: the shift by +2 must land on an admissible monomial
  CHECK_FALSE(check_ic_shifted(mon(2, {{{1, 1}, -3}}), 1, 1));
  CHECK(check_ic_shifted(mon(2, {{{1, 2}, -3}}), 1, 1));
  // negative m admits degrees up to -2m-1; the row bound moves with it
  CHECK(check_ic_shifted(mon(2, {{{1, 2}, 1}}), 1, -1));
  CHECK_FALSE(check_ic_shifted(mon(2, {{{1, 1}, 1}}), 1, -1));
  CHECK_FALSE(check_ic_shifted(mon(2, {{{1, 2}, 2}}), 1, -1));
}

TEST_CASE("shifted IC relaxes as the tail index grows") {
  std::mt19937 rng(31);
  for (int it = 0; it < 300; ++it) {
    Monomial p = testutil::random_monomial(rng, 2, 4, -4, 5);
    for (int r = 0; r <= 2; ++r)
      for (int m = 0; m <= 3; ++m)
        if (check_ic_shifted(p, r, -m)) CHECK(check_ic_shifted(p, r, -(m + 1)));
  }
}

TEST_CASE("level-k admissibility: examples") {
  HighestWeight twoL0({2, 0, 0});
  auto w = check_dc_ic_level_k(mon(2, {{{1, 1}, -1}, {{1, 1}, -1}}), twoL0, 0);
  REQUIRE(w.has_value());
  CHECK(w->slot_targets == std::vector<int>{0, 0});
  CHECK(w->slot_of_factor[0] != w->slot_of_factor[1]);

  HighestWeight twoL1({0, 2, 0});
  CHECK_FALSE(check_dc_ic_level_k(mon(2, {{{1, 1}, -1}}), twoL1, 0).has_value());

  CHECK(check_dc_ic_level_k(Monomial(2), twoL1, 0).has_value());
}

TEST_CASE("level-k witness extracts into admissible pieces") {
  HighestWeight L({1, 1, 0});
  std::mt19937 rng(77);
  for (int it = 0; it < 400; ++it) {
    Monomial p = testutil::random_monomial(rng, 2, 5, -3);
    auto w = check_dc_ic_level_k(p, L, 0);
    if (!w) continue;
    for (int s = 0; s < L.level(); ++s) {
      std::vector<Variable> sub;
      for (size_t i = 0; i < p.factors().size(); ++i)
        if (w->slot_of_factor[i] == s) sub.push_back(p.factors()[i]);
      Monomial piece(2, std::move(sub));
      CHECK(check_dc_level1(piece));
      CHECK(check_ic_shifted(piece, w->slot_targets[static_cast<size_t>(s)], 0));
    }
  }
}

TEST_CASE("level-k checker agrees with the brute-force oracle") {
  std::vector<HighestWeight> lams{HighestWeight({2, 0, 0}), HighestWeight({1, 1, 0})};
  auto monos = testutil::all_monomials(2, 3);
  for (const HighestWeight& L : lams)
    for (const Monomial& p : monos) {
      CAPTURE(to_string(p));
      REQUIRE(check_dc_ic_level_k(p, L, 0).has_value() == brute_force_level_k(p, L, 0));
      // shifted picture: the same multisets moved up by 2
      Monomial q = shift(p, 2);
      REQUIRE(check_dc_ic_level_k(q, L, 1).has_value() == brute_force_level_k(q, L, 1));
    }
}

TEST_CASE("level 1 reduces to the level-one checks") {
  HighestWeight L1({0, 1, 0});
  std::mt19937 rng(17);
  for (int it = 0; it < 300; ++it) {
    Monomial p = testutil::random_monomial(rng, 2, 4, -4);
    bool via_k = check_dc_ic_level_k(p, L1, 0).has_value();
    bool direct = check_dc_level1(p) && check_ic_shifted(p, 1, 0);
    CHECK(via_k == direct);
  }
}

TEST_CASE("brute force guard") {
  std::vector<Variable> many(17, Variable{{1, 1}, -1});
  CHECK_THROWS_AS(brute_force_level_k(Monomial(2, many), HighestWeight({2, 0, 0}), 0),
                  std::invalid_argument);
}

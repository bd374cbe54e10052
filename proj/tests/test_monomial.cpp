#include "cbasis/monomial.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace cbasis;

namespace {
Monomial mon(int ell, std::initializer_list<Variable> vs) { return Monomial(ell, std::vector<Variable>(vs)); }
}  // namespace

TEST_CASE("cmp_variable") {
  Variable a{{1, 1}, -2}, b{{2, 2}, -1};
  CHECK(cmp_variable(a, b) == std::strong_ordering::less);  // degree decides first
  CHECK(cmp_variable({{2, 2}, -1}, {{1, 1}, -1}) == std::strong_ordering::less);
  CHECK(cmp_variable({{1, 2}, -1}, {{1, 2}, -1}) == std::strong_ordering::equal);
}

TEST_CASE("canonical form sorts ascending; rightmost factor is greatest") {
  Monomial p = mon(2, {{{1, 1}, -1}, {{2, 2}, -1}});
  CHECK(to_string(p) == "x[2,2](-1) x[1,1](-1)");
  Monomial q = mon(2, {{{1, 2}, -1}, {{1, 2}, -2}});
  CHECK(to_string(q) == "x[1,2](-2) x[1,2](-1)");
  CHECK_THROWS_AS(mon(2, {{{1, 3}, -1}}), std::invalid_argument);
}

TEST_CASE("cmp_monomial basic cases") {
  Monomial a = mon(2, {{{1, 1}, -2}, {{1, 1}, -1}});
  Monomial b = mon(2, {{{1, 2}, -1}});
  CHECK(cmp_monomial(a, b) == std::strong_ordering::greater);  // x11(-1) > x12(-1)
  CHECK(cmp_monomial(a, a) == std::strong_ordering::equal);

  // Right-aligned tie: the longer monomial is greater, the empty one is least.
  Monomial e(2);
  Monomial s = mon(2, {{{1, 1}, -1}});
  CHECK(cmp_monomial(e, s) == std::strong_ordering::less);
  Monomial ts = mon(2, {{{2, 2}, -3}, {{1, 1}, -1}});
  CHECK(cmp_monomial(s, ts) == std::strong_ordering::less);
}

TEST_CASE("order is compatible with multiplication") {
  // The case that pins the tie rule: p = x11(-1), q = 1, r = x11(-3).
  Monomial p = mon(2, {{{1, 1}, -1}});
  Monomial q(2);
  Monomial r = mon(2, {{{1, 1}, -3}});
  REQUIRE(q < p);
  CHECK(multiply(q, r) < multiply(p, r));

  // Exhaustive over small monomials.
  auto all = testutil::all_monomials(2, 3);
  for (const Monomial& a : all)
    for (const Monomial& b : all) {
      if (!(a < b)) continue;
      for (const Monomial& c : all) {
        CAPTURE(to_string(a));
        CAPTURE(to_string(b));
        CAPTURE(to_string(c));
        REQUIRE(multiply(a, c) < multiply(b, c));
      }
    }

  // Random triples at ell = 3.
  std::mt19937 rng(12345);
  for (int it = 0; it < 2000; ++it) {
    Monomial a = testutil::random_monomial(rng, 3, 4, -5);
    Monomial b = testutil::random_monomial(rng, 3, 4, -5);
    Monomial c = testutil::random_monomial(rng, 3, 4, -5);
    auto cab = cmp_monomial(a, b);
    if (cab == std::strong_ordering::equal) continue;
    auto cmult = cmp_monomial(multiply(a, c), multiply(b, c));
    CHECK(cmult == cab);
  }
}

TEST_CASE("shift") {
  Monomial p = mon(2, {{{1, 2}, -2}, {{1, 2}, -1}});
  CHECK(to_string(shift(p, 2)) == "x[1,2](0) x[1,2](1)");
  CHECK(shift(p, 0) == p);
  CHECK(shift(shift(p, 3), -3) == p);
}

TEST_CASE("multiply") {
  Monomial p = mon(2, {{{1, 1}, -1}});
  Monomial q = mon(2, {{{2, 2}, -1}});
  CHECK(to_string(multiply(p, q)) == "x[2,2](-1) x[1,1](-1)");
  CHECK(multiply(p, Monomial(2)) == p);
  std::mt19937 rng(7);
  for (int it = 0; it < 100; ++it) {
    Monomial a = testutil::random_monomial(rng, 2, 3, -4);
    Monomial b = testutil::random_monomial(rng, 2, 3, -4);
    Monomial c = testutil::random_monomial(rng, 2, 3, -4);
    CHECK(multiply(a, b) == multiply(b, a));
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
  }
}

TEST_CASE("weight") {
  CHECK(weight(Monomial(2)) == WeightTag{{0, 0}, 0});
  CHECK(weight(mon(2, {{{1, 2}, -2}, {{1, 2}, -1}})) == WeightTag{{2, 2}, 3});
  CHECK(weight(mon(2, {{{2, 2}, -1}, {{1, 1}, -1}})) == WeightTag{{2, 2}, 2});
  std::mt19937 rng(11);
  for (int it = 0; it < 100; ++it) {
    Monomial a = testutil::random_monomial(rng, 3, 3, -4);
    Monomial b = testutil::random_monomial(rng, 3, 3, -4);
    WeightTag wa = weight(a), wb = weight(b), wab = weight(multiply(a, b));
    CHECK(wab.classical == eps_add(wa.classical, wb.classical));
    CHECK(wab.depth == wa.depth + wb.depth);
  }
}

TEST_CASE("shift changes depth by m per factor, classical part fixed") {
  std::mt19937 rng(13);
  for (int it = 0; it < 50; ++it) {
    Monomial a = testutil::random_monomial(rng, 2, 4, -4);
    for (int m : {-2, 1, 3}) {
      WeightTag w0 = weight(a), w1 = weight(shift(a, m));
      CHECK(w1.classical == w0.classical);
      CHECK(w1.depth == w0.depth - static_cast<long long>(m) * a.size());
    }
  }
}

TEST_CASE("divides / quotient") {
  Monomial whole = mon(2, {{{1, 1}, -1}, {{1, 1}, -1}, {{2, 2}, -2}});
  Monomial part = mon(2, {{{1, 1}, -1}, {{2, 2}, -2}});
  CHECK(divides(part, whole));
  CHECK(quotient(whole, part) == mon(2, {{{1, 1}, -1}}));
  Monomial other = mon(2, {{{1, 2}, -1}});
  CHECK_FALSE(divides(other, whole));
  CHECK_THROWS_AS(quotient(whole, multiply(part, part)), std::invalid_argument);
}

TEST_CASE("text round-trip") {
  CHECK(to_string(Monomial(2)) == "1");
  CHECK(parse_monomial("1", 2) == Monomial(2));
  // any input order is canonicalized
  CHECK(parse_monomial("x[1,1](-1) x[2,2](-1)", 2) == parse_monomial("x[2,2](-1) x[1,1](-1)", 2));
  std::mt19937 rng(99);
  for (int it = 0; it < 200; ++it) {
    Monomial a = testutil::random_monomial(rng, 3, 5, -6, 4);
    CHECK(parse_monomial(to_string(a), 3) == a);
  }
  CHECK_THROWS_AS(parse_monomial("", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("x[1,2](-1", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("x[2,1](-1)", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("x[0,1](-1)", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("x[1,3](-1)", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("y[1,1](0)", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("x[1,1](0) junk", 2), std::invalid_argument);
}

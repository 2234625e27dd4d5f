#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "klsp4/tally.hpp"

using namespace klsp4;

TEST_CASE("orbit relation sums to zero") {
  CyclotomicTally t(3, 1);
  for (i64 j = 0; j < 3; ++j) t.add_phase(PhaseFrac{j, 1});
  CHECK(t.is_zero());
  CHECK(t.magnitude() == doctest::Approx(0.0));
}

TEST_CASE("equality across levels") {
  CyclotomicTally a(2, 2);
  a.add_phase(PhaseFrac{0, 0});  // the constant 1 at level 2
  CyclotomicTally b = CyclotomicTally::integer(2, 1);
  CHECK(a.equals(b));
  // e(1/2) == -1: 1 + e(1/2) == 0.
  CyclotomicTally c(2, 1);
  c.add_phase(PhaseFrac{0, 1});
  c.add_phase(PhaseFrac{1, 1});
  CHECK(c.is_zero());
}

TEST_CASE("canonical form lowers level") {
  CyclotomicTally t(3, 2);
  t.add_phase(PhaseFrac{0, 1}, 5);  // 5 * e(0/3) lifted into level 2
  CyclotomicTally canon = t.canonical();
  CHECK(canon.level() == 0);
  CHECK(canon.counts()[0] == 5);
}

TEST_CASE("exact division") {
  CyclotomicTally t(5, 1);
  t.add_phase(PhaseFrac{1, 1}, 6);
  t.add_phase(PhaseFrac{2, 1}, 6);
  CyclotomicTally half = t.exact_divide(3);
  CyclotomicTally want(5, 1);
  want.add_phase(PhaseFrac{1, 1}, 2);
  want.add_phase(PhaseFrac{2, 1}, 2);
  CHECK(half.equals(want));
  CHECK_THROWS_AS(t.exact_divide(4), domain_error);
}

TEST_CASE("magnitude of known combinations") {
  // 1 + e(1/4) = 1 + i.
  CyclotomicTally t(2, 2);
  t.add_phase(PhaseFrac{0, 2});
  t.add_phase(PhaseFrac{1, 2});
  CHECK(t.magnitude() == doctest::Approx(std::sqrt(2.0)));
  // Sum of all primitive 5th roots is -1.
  CyclotomicTally u(5, 1);
  for (i64 j = 1; j < 5; ++j) u.add_phase(PhaseFrac{j, 1});
  CHECK(u.magnitude() == doctest::Approx(1.0));
}

TEST_CASE("digest is canonical") {
  CyclotomicTally a(3, 2);
  a.add_phase(PhaseFrac{1, 1});  // e(1/3) expressed at level 2
  CyclotomicTally b(3, 1);
  b.add_phase(PhaseFrac{1, 1});
  CHECK(a.digest() == b.digest());
  CyclotomicTally c(3, 1);
  c.add_phase(PhaseFrac{2, 1});
  CHECK(a.digest() != c.digest());
}

TEST_CASE("negate and scale") {
  CyclotomicTally t = CyclotomicTally::integer(2, 3);
  t.scale(4);
  CyclotomicTally u = CyclotomicTally::integer(2, -12);
  u.negate();
  CHECK(t.equals(u));
}

TEST_CASE("product of tallies") {
  // (1 + e(1/3)) * (1 + e(2/3)) = 2 + e(1/3) + e(2/3) = 1.
  CyclotomicTally a(3, 1), b(3, 1);
  a.add_phase(PhaseFrac{0, 1});
  a.add_phase(PhaseFrac{1, 1});
  b.add_phase(PhaseFrac{0, 1});
  b.add_phase(PhaseFrac{2, 1});
  CHECK(tally_product(a, b).equals(CyclotomicTally::integer(3, 1)));
  // Multiplication by an integer tally is scaling.
  CyclotomicTally three = CyclotomicTally::integer(3, 3);
  CyclotomicTally scaled = a;
  scaled.scale(3);
  CHECK(tally_product(a, three).equals(scaled));
}

TEST_CASE("phase conversion from rationals") {
  PhaseFrac f = phase_from_rat(Rat(7, 9), 3);
  CHECK(f.num == 7);
  CHECK(f.level == 2);
  PhaseFrac g = phase_from_rat(Rat(-1, 3), 3);
  CHECK(g.num == 2);
  CHECK(g.level == 1);
  CHECK_THROWS_AS(phase_from_rat(Rat(1, 6), 3), domain_error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "klsp4/sums.hpp"

using namespace klsp4;

namespace {

KloostermanValue eval(Weyl w, i64 p, int r, int s, i64 m1, i64 m2, i64 n1, i64 n2) {
  return kl(CellParams(w, p, r, s), CharacterPair{m1, m2, n1, n2});
}

bool is_integer(const KloostermanValue& v, i64 want) {
  return v.tally.equals(CyclotomicTally::integer(v.tally.prime(), want));
}

}  // namespace

TEST_CASE("classical rank-one sums") {
  CHECK(gl2_kloosterman(1, 1, 5).magnitude() == doctest::Approx(0.3819660113));
  CHECK(gl2_kloosterman(0, 0, 9).equals(CyclotomicTally::integer(3, 6)));  // phi(9)
  CHECK(gl2_kloosterman(1, 0, 9).equals(ramanujan(9, 1)));
  CHECK(gl2_kloosterman(2, 3, 1).equals(CyclotomicTally::integer(2, 1)));

  CHECK(ramanujan(9, 3).equals(CyclotomicTally::integer(3, -3)));
  CHECK(ramanujan(9, 9).equals(CyclotomicTally::integer(3, 6)));
  CHECK(ramanujan(8, 1).equals(CyclotomicTally::integer(2, 0)));

  CHECK(gauss_quadratic(1, PrimePower(3, 1)).magnitude() == doctest::Approx(std::sqrt(3.0)));
  CHECK(gauss_quadratic(1, PrimePower(3, 2)).magnitude() == doctest::Approx(3.0));
  CHECK(gauss_quadratic(2, PrimePower(5, 1)).magnitude() == doctest::Approx(std::sqrt(5.0)));
  CHECK(gauss_quadratic(1, PrimePower(2, 2)).magnitude() == doctest::Approx(2.0 * std::sqrt(2.0)));
}

TEST_CASE("identity cell") {
  CHECK(is_integer(eval(Weyl::Id, 3, 0, 0, 1, 2, 3, 4), 1));
}

TEST_CASE("rank-one cells match classical sums") {
  CHECK(eval(Weyl::A, 3, 2, 0, 1, 0, 2, 0).tally.equals(gl2_kloosterman(1, 2, 9)));
  CHECK(eval(Weyl::B, 2, 0, 3, 0, 1, 0, 1).tally.equals(gl2_kloosterman(1, 1, 8)));
}

TEST_CASE("frozen exact values") {
  CHECK(is_integer(eval(Weyl::W0, 2, 1, 1, 1, 1, 1, 1), 3));
  CHECK(is_integer(eval(Weyl::W0, 2, 1, 1, 1, 0, 0, 1), 3));
  CHECK(is_integer(eval(Weyl::W0, 2, 1, 1, 1, 2, 2, 1), 3));
  CHECK(is_integer(eval(Weyl::BAB, 3, 1, 2, 1, 1, 0, 1), 3));
  CHECK(is_integer(eval(Weyl::BAB, 2, 1, 2, 1, 1, 1, 1), 2));
  CHECK(is_integer(eval(Weyl::ABA, 2, 2, 1, 1, 1, 1, 0), 2));
  CHECK(is_integer(eval(Weyl::ABA, 3, 2, 2, 1, 1, 1, 1), 27));
  CHECK(is_integer(eval(Weyl::AB, 2, 2, 1, 1, 1, 0, 1), -2));
  CHECK(eval(Weyl::BA, 3, 1, 3, 1, 2, 1, 1).tally.magnitude() ==
        doctest::Approx(23.811761800).epsilon(1e-8));
}

TEST_CASE("frozen zeros") {
  CHECK(eval(Weyl::BAB, 3, 1, 1, 1, 1, 1, 1).tally.is_zero());
  CHECK(eval(Weyl::ABA, 3, 1, 1, 1, 1, 1, 1).tally.is_zero());
  CHECK(eval(Weyl::BA, 2, 1, 2, 1, 1, 1, 1).tally.is_zero());
  CHECK(eval(Weyl::A, 3, 2, 0, 1, 0, 2, 0).tally.is_zero());
  CHECK(eval(Weyl::B, 2, 0, 3, 0, 1, 0, 1).tally.is_zero());
}

TEST_CASE("documented worked example") {
  KloostermanValue v = eval(Weyl::AB, 3, 1, 1, 1, 1, 0, 1);
  CHECK(is_integer(v, -3));
  CHECK(v.skipped_unsolvable == 0);
}

TEST_CASE("budget exhaustion") {
  Budget tiny(5);
  CHECK_THROWS_AS(kl(CellParams(Weyl::W0, 3, 2, 2), CharacterPair{1, 1, 1, 1}, tiny),
                  budget_error);
}

TEST_CASE("global product over distinct primes") {
  GlobalValue g = kl_global({{CellParams(Weyl::W0, 2, 1, 1), CharacterPair{1, 1, 1, 1}},
                             {CellParams(Weyl::AB, 3, 1, 1), CharacterPair{1, 1, 0, 1}}});
  CHECK(g.magnitude == doctest::Approx(9.0));
  CHECK_THROWS_AS(kl_global({{CellParams(Weyl::W0, 2, 1, 1), CharacterPair{1, 1, 1, 1}},
                             {CellParams(Weyl::AB, 2, 1, 1), CharacterPair{1, 1, 0, 1}}}),
                  domain_error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klsp4/strat.hpp"
#include "klsp4/sums.hpp"

using namespace klsp4;

TEST_CASE("scaling tuple group has order phi(q)^2") {
  for (Weyl w : ALL_WEYL)
    for (auto [p, l] : {std::pair<i64, int>{2, 1}, {2, 3}, {3, 1}, {3, 2}, {5, 1}}) {
      PrimePower pk(p, l);
      i64 phi = pk.q - pk.q / pk.p;
      CHECK(enumerate_Vw(w, pk).size() == static_cast<size_t>(phi * phi));
    }
}

TEST_CASE("scaling tuple relations per cell") {
  PrimePower pk(5, 1);
  for (const VwElement& v : enumerate_Vw(Weyl::W0, pk)) {
    CHECK(mul_mod(v.l1, v.lp1, 5) == 1);
    CHECK(mul_mod(v.l2, v.lp2, 5) == 1);
  }
  for (const VwElement& v : enumerate_Vw(Weyl::ABA, pk))
    CHECK(mul_mod(mul_mod(v.l1, v.l2, 5), v.lp1, 5) == 1);
  for (const VwElement& v : enumerate_Vw(Weyl::BAB, pk))
    CHECK(mul_mod(mul_mod(mul_mod(v.l1, v.l1, 5), v.l2, 5), v.lp2, 5) == 1);
}

TEST_CASE("torus action permutes the enumerated set") {
  CellParams c(Weyl::AB, 3, 1, 1);
  std::vector<OracleCell> cells = enumerate_X(c);
  PrimePower level(3, 2);
  auto orbits = torus_orbits(cells, c, level);
  i64 total = 0;
  for (const auto& [rep, size] : orbits) total += size;
  CHECK(total == static_cast<i64>(cells.size()));
}

TEST_CASE("orbit sum identity on sample cells") {
  CHECK(stevens_identity_check(CellParams(Weyl::A, 3, 1, 0), CharacterPair{1, 0, 1, 0}, 1));
  CHECK(stevens_identity_check(CellParams(Weyl::AB, 3, 1, 1), CharacterPair{1, 1, 0, 1}, 1));
  CHECK(stevens_identity_check(CellParams(Weyl::AB, 3, 1, 1), CharacterPair{1, 1, 0, 1}, 2));
  CHECK(stevens_identity_check(CellParams(Weyl::W0, 2, 1, 1), CharacterPair{1, 1, 1, 1}, 1));
  CHECK(stevens_identity_check(CellParams(Weyl::BAB, 2, 1, 2), CharacterPair{1, 1, 1, 1}, 2));
}

TEST_CASE("rejects levels below the coordinate denominators") {
  CHECK_THROWS_AS(
      stevens_identity_check(CellParams(Weyl::AB, 3, 2, 1), CharacterPair{1, 1, 1, 1}, 1),
      domain_error);
}

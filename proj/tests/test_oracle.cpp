#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klsp4/oracle.hpp"
#include "klsp4/sums.hpp"

using namespace klsp4;

namespace {

size_t x_size(Weyl w, i64 p, int r, int s) {
  return enumerate_X(CellParams(w, p, r, s)).size();
}

}  // namespace

TEST_CASE("frozen enumeration sizes") {
  CHECK(x_size(Weyl::Id, 3, 0, 0) == 1);
  CHECK(x_size(Weyl::AB, 3, 1, 1) == 6);
  CHECK(x_size(Weyl::ABA, 3, 1, 1) == 6);
  CHECK(x_size(Weyl::BAB, 3, 1, 1) == 6);
  CHECK(x_size(Weyl::W0, 3, 1, 1) == 10);
  CHECK(x_size(Weyl::BA, 3, 1, 2) == 18);
  CHECK(x_size(Weyl::ABA, 2, 2, 2) == 12);
  CHECK(x_size(Weyl::ABA, 2, 3, 1) == 4);
  CHECK(x_size(Weyl::BAB, 2, 1, 2) == 6);
  CHECK(x_size(Weyl::BAB, 2, 2, 2) == 8);
  CHECK(x_size(Weyl::BAB, 2, 1, 3) == 8);
  CHECK(x_size(Weyl::W0, 2, 2, 2) == 18);
  CHECK(x_size(Weyl::W0, 2, 1, 3) == 12);
  CHECK(x_size(Weyl::W0, 2, 3, 1) == 8);
  CHECK(x_size(Weyl::BA, 2, 1, 3) == 4);
  CHECK(x_size(Weyl::AB, 2, 3, 1) == 4);
}

TEST_CASE("denominator caps are closed") {
  CHECK(certify_cap_closure(CellParams(Weyl::AB, 3, 1, 1)));
  CHECK(certify_cap_closure(CellParams(Weyl::BA, 2, 1, 2)));
  CHECK(certify_cap_closure(CellParams(Weyl::ABA, 2, 2, 1)));
  CHECK(certify_cap_closure(CellParams(Weyl::BAB, 3, 1, 1)));
  CHECK(certify_cap_closure(CellParams(Weyl::W0, 2, 2, 2)));
  CHECK(certify_cap_closure(CellParams(Weyl::A, 3, 2, 0)));
}

TEST_CASE("enumeration matches closed forms") {
  for (auto [w, p, r, s] : {std::tuple<Weyl, i64, int, int>{Weyl::AB, 3, 1, 1},
                            {Weyl::BA, 2, 1, 2},
                            {Weyl::ABA, 3, 1, 2},
                            {Weyl::BAB, 2, 1, 2},
                            {Weyl::W0, 3, 1, 1}}) {
    CellParams c(w, p, r, s);
    std::vector<OracleCell> cells = enumerate_X(c);
    for (CharacterPair ch : {CharacterPair{1, 1, 1, 1}, CharacterPair{1, 0, 2, 1},
                             CharacterPair{0, 1, 1, 0}}) {
      KloostermanValue direct = kl(c, ch);
      KloostermanValue oracle = oracle_kl_from_cells(cells, c, ch);
      CHECK(direct.tally.equals(oracle.tally));
      CHECK(direct.term_count == oracle.term_count);
      CHECK(direct.skipped_unsolvable == 0);
    }
  }
}

TEST_CASE("torus twisting") {
  CellParams c(Weyl::W0, 3, 1, 1);
  CharacterPair ch{1, 1, 1, 1};
  CHECK(check_torus_twist_left(c, ch, TorusUnits{2, 1}));
  CHECK(check_torus_twist_left(c, ch, TorusUnits{1, 2}));
  CHECK(check_torus_twist_right(c, ch, TorusUnits{2, 2}));
  CellParams c2(Weyl::AB, 2, 2, 1);
  CHECK(check_torus_twist_left(c2, CharacterPair{1, 1, 0, 1}, TorusUnits{3, 5}));
  CHECK(check_torus_twist_right(c2, CharacterPair{1, 1, 0, 1}, TorusUnits{5, 3}));
}

TEST_CASE("enumeration respects the budget") {
  Budget tiny(10);
  CHECK_THROWS_AS(enumerate_X(CellParams(Weyl::W0, 3, 2, 2), DenominatorCap{}, tiny),
                  budget_error);
}

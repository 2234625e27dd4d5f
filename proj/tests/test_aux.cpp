#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klsp4/auxsum.hpp"

using namespace klsp4;

TEST_CASE("compatibility criterion per cell") {
  // Opposite-side roots empty: every character pair is compatible.
  CHECK(is_well_defined(CellParams(Weyl::W0, 3, 1, 2), CharacterPair{5, -3, 2, 7}));

  // Identity cell: the two characters must agree.
  CHECK(is_well_defined(CellParams(Weyl::Id, 3, 0, 0), CharacterPair{2, 5, 2, 5}));
  CHECK_FALSE(is_well_defined(CellParams(Weyl::Id, 3, 0, 0), CharacterPair{2, 5, 2, 4}));

  // One-letter cells force the untouched coordinates to vanish.
  CHECK(is_well_defined(CellParams(Weyl::A, 3, 1, 0), CharacterPair{4, 0, 9, 0}));
  CHECK_FALSE(is_well_defined(CellParams(Weyl::A, 3, 1, 0), CharacterPair{4, 1, 9, 0}));
  CHECK(is_well_defined(CellParams(Weyl::B, 3, 0, 2), CharacterPair{0, 4, 0, 9}));
  CHECK(is_well_defined(CellParams(Weyl::AB, 3, 2, 1), CharacterPair{1, 0, 0, 5}));
  CHECK(is_well_defined(CellParams(Weyl::BA, 3, 1, 2), CharacterPair{0, 1, 5, 0}));

  // Three-letter cells tie the remaining coordinate by a power of p.
  CHECK(is_well_defined(CellParams(Weyl::ABA, 3, 2, 1), CharacterPair{1, 1, 2, 9}));
  CHECK_FALSE(is_well_defined(CellParams(Weyl::ABA, 3, 2, 1), CharacterPair{1, 1, 2, 3}));
  CHECK(is_well_defined(CellParams(Weyl::BAB, 3, 1, 3), CharacterPair{1, 1, 3, 2}));
  CHECK_FALSE(is_well_defined(CellParams(Weyl::BAB, 3, 1, 3), CharacterPair{1, 1, 1, 2}));
}

TEST_CASE("auxiliary sum equals the ordinary sum when compatible") {
  CellParams c(Weyl::W0, 3, 1, 1);
  CharacterPair ch{1, 1, 1, 1};
  CHECK(aux_kl(c, ch).tally.equals(kl(c, ch).tally));

  // Incompatible data gives the zero value.
  CellParams c2(Weyl::AB, 3, 1, 1);
  CHECK(aux_kl(c2, CharacterPair{1, 1, 1, 1}).tally.is_zero());
  CHECK(aux_kl(c2, CharacterPair{1, 1, 1, 1}).term_count == 0);
}

TEST_CASE("condition table rows") {
  std::vector<ConditionTableRow> table = condition_table();
  REQUIRE(table.size() == 8);
  CHECK(table[0].w == "id");
  CHECK(table[0].condition == "m1 = n1, m2 = n2");
  CHECK(table[1].condition == "m2 = n2 = 0");
  CHECK(table[2].condition == "m1 = n1 = 0");
  CHECK(table[3].condition == "m2 = n1 = 0");
  CHECK(table[4].condition == "m1 = n2 = 0");
  CHECK(table[5].condition == "n2 = m2 p^(2r - 2s)");
  CHECK(table[6].condition == "n1 = m1 p^(s - 2r)");
  CHECK(table[7].condition == "-");
}

TEST_CASE("table serializes to JSON") {
  std::string json = condition_table_json();
  CHECK(json.find("\"w\": \"aba\"") != std::string::npos);
  CHECK(json.find("2r - 2s") != std::string::npos);
}

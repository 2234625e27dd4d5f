#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "klsp4/sp4.hpp"

using namespace klsp4;

TEST_CASE("weyl names round-trip") {
  for (Weyl w : ALL_WEYL) {
    auto back = weyl_from_name(weyl_name(w));
    REQUIRE(back.has_value());
    CHECK(*back == w);
  }
  CHECK_FALSE(weyl_from_name("abab").has_value());
}

TEST_CASE("admissibility") {
  CHECK(admissible(Weyl::Id, 0, 0));
  CHECK_FALSE(admissible(Weyl::Id, 1, 0));
  CHECK(admissible(Weyl::A, 2, 0));
  CHECK_FALSE(admissible(Weyl::A, 2, 1));
  CHECK(admissible(Weyl::AB, 2, 1));
  CHECK_FALSE(admissible(Weyl::AB, 1, 2));
  CHECK(admissible(Weyl::BA, 1, 2));
  CHECK_FALSE(admissible(Weyl::BA, 1, 1));
  CHECK(admissible(Weyl::ABA, 1, 2));
  CHECK_FALSE(admissible(Weyl::ABA, 1, 3));
  CHECK(admissible(Weyl::BAB, 1, 1));
  CHECK_FALSE(admissible(Weyl::BAB, 2, 1));
  CHECK(admissible(Weyl::W0, 3, 1));
  CHECK_THROWS_AS(CellParams(Weyl::BA, 3, 1, 1), domain_error);
  CHECK_THROWS_AS(CellParams(Weyl::W0, 4, 1, 1), domain_error);
}

TEST_CASE("unipotent matrices respect the group law") {
  UnipotentCoords a{Rat(1, 3), Rat(2), Rat(-1), Rat(5, 9)};
  UnipotentCoords b{Rat(2), Rat(1, 9), Rat(1, 3), Rat(-2)};
  Mat4 prod = mat_mul(unipotent_matrix(a), unipotent_matrix(b));
  CHECK(mat_equal(prod, unipotent_matrix(unipotent_mul(a, b))));
  CHECK(is_symplectic(unipotent_matrix(a)));
}

TEST_CASE("cell matrices are symplectic with the right valuations") {
  for (Weyl w : ALL_WEYL) {
    // A representative admissible exponent pair for each cell.
    int r = 0, s = 0;
    switch (w) {
      case Weyl::Id: r = 0; s = 0; break;
      case Weyl::A: r = 2; s = 0; break;
      case Weyl::B: r = 0; s = 2; break;
      case Weyl::AB: r = 2; s = 1; break;
      case Weyl::BA: r = 1; s = 2; break;
      case Weyl::ABA: r = 2; s = 3; break;
      case Weyl::BAB: r = 1; s = 2; break;
      case Weyl::W0: r = 2; s = 1; break;
    }
    CellParams c(w, 3, r, s);
    Mat4 n = cell_matrix(c);
    CHECK(is_symplectic(n));
    // Each row and column holds exactly one nonzero entry.
    for (int i = 0; i < 4; ++i) {
      int row_nz = 0, col_nz = 0;
      for (int j = 0; j < 4; ++j) {
        if (n[i][j].num != 0) ++row_nz;
        if (n[j][i].num != 0) ++col_nz;
      }
      CHECK(row_nz == 1);
      CHECK(col_nz == 1);
    }
  }
}

TEST_CASE("coset reductions") {
  UnipotentCoords u{Rat(7, 3), Rat(-5, 9), Rat(11, 3), Rat(-1, 3)};
  UnipotentCoords d = reduce_left(u);
  for (Root g : ALL_ROOTS) {
    CHECK(d.coord(g).num >= 0);
    CHECK(d.coord(g).num < d.coord(g).den);
  }
  // u * d^{-1} must be integral: check via matrices.
  Mat4 diff = mat_mul(unipotent_matrix(u), mat_inverse(unipotent_matrix(d)));
  CHECK(is_p_integral(diff, 3));

  UnipotentCoords e = reduce_right(u);
  Mat4 diff2 = mat_mul(mat_inverse(unipotent_matrix(e)), unipotent_matrix(u));
  CHECK(is_p_integral(diff2, 3));
  for (Root g : ALL_ROOTS) {
    CHECK(e.coord(g).num >= 0);
    CHECK(e.coord(g).num < e.coord(g).den);
  }
}

TEST_CASE("root partition per cell") {
  auto as_set = [](const std::vector<Root>& v) { return std::set<Root>(v.begin(), v.end()); };
  CHECK(as_set(uw_roots(Weyl::Id)).empty());
  CHECK(as_set(uw_roots(Weyl::A)) == std::set<Root>{Root::Alpha});
  CHECK(as_set(uw_roots(Weyl::B)) == std::set<Root>{Root::Beta});
  CHECK(as_set(uw_roots(Weyl::AB)) == std::set<Root>{Root::AlphaBeta, Root::Beta});
  CHECK(as_set(uw_roots(Weyl::BA)) == std::set<Root>{Root::Alpha, Root::TwoAlphaBeta});
  CHECK(as_set(uw_roots(Weyl::ABA)) ==
        std::set<Root>{Root::Alpha, Root::TwoAlphaBeta, Root::AlphaBeta});
  CHECK(as_set(uw_roots(Weyl::BAB)) ==
        std::set<Root>{Root::TwoAlphaBeta, Root::AlphaBeta, Root::Beta});
  CHECK(as_set(uw_roots(Weyl::W0)).size() == 4);
  for (Weyl w : ALL_WEYL) {
    CHECK(uw_roots(w).size() + ubar_roots(w).size() == 4);
    for (Root g : delta_w(w)) CHECK((g == Root::Alpha || g == Root::Beta));
  }
}

TEST_CASE("diagonal conjugation permutation") {
  for (Weyl w : ALL_WEYL) {
    std::array<int, 4> perm = weyl_diag_permutation(w);
    std::set<int> seen(perm.begin(), perm.end());
    CHECK(seen.size() == 4);
  }
  // The identity fixes every diagonal slot.
  std::array<int, 4> id_perm = weyl_diag_permutation(Weyl::Id);
  for (int i = 0; i < 4; ++i) CHECK(id_perm[static_cast<size_t>(i)] == i);
}

TEST_CASE("character evaluation and twisting") {
  UnipotentCoords u{Rat(1, 3), Rat(0), Rat(0), Rat(2, 9)};
  PhaseFrac f = psi_value(u, 1, 1, 3);
  CHECK(f.level == 2);
  CHECK(f.num == 5);  // 1/3 + 2/9

  PrimePower pk(3, 2);
  auto [m1t, m2t] = twist_character(TorusUnits{2, 4}, 1, 1, pk);
  CHECK(m1t == mod_reduce(2 * inv_mod(4, 9), 9));
  CHECK(m2t == mod_reduce(16, 9));
  CHECK(is_symplectic(torus_matrix(TorusUnits{2, 4})));
}

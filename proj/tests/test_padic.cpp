#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klsp4/padic.hpp"
#include "klsp4/rational.hpp"

using namespace klsp4;

TEST_CASE("valuation and prime powers") {
  CHECK(valuation(12, 2) == 2);
  CHECK(valuation(12, 3) == 1);
  CHECK(valuation(1, 7) == 0);
  CHECK(valuation(0, 5) == VAL_INF);
  CHECK(checked_pow(3, 4) == 81);
  CHECK(checked_pow(2, 0) == 1);
  CHECK_THROWS_AS(checked_pow(10, 20), domain_error);
}

TEST_CASE("modular arithmetic") {
  CHECK(mod_reduce(-1, 7) == 6);
  CHECK(mod_reduce(15, 7) == 1);
  CHECK(mul_mod(123456789, 987654321, 1000000007) ==
        (static_cast<i128>(123456789) * 987654321) % 1000000007);
  CHECK(pow_mod(2, 10, 1000) == 24);
  CHECK(inv_mod(3, 7) == 5);
  CHECK(inv_mod(5, 9) == 2);
  CHECK(inv_mod(1, 1) == 0);  // convention: everything is 0 mod 1
  CHECK_THROWS_AS(inv_mod(3, 9), domain_error);
  CHECK(has_inverse(4, 9));
  CHECK_FALSE(has_inverse(6, 9));
}

TEST_CASE("prime power structure") {
  PrimePower pk(3, 2);
  CHECK(pk.q == 9);
  CHECK(unit_residues(pk).size() == 6);
  CHECK(unit_residues(PrimePower(2, 0)).size() == 1);  // the degenerate modulus 1
  CHECK_THROWS_AS(PrimePower(4, 1), domain_error);
}

TEST_CASE("unit group generators reach every unit") {
  for (auto [p, k] : {std::pair<i64, int>{3, 3}, {2, 1}, {2, 2}, {2, 5}, {5, 2}}) {
    PrimePower pk(p, k);
    std::vector<i64> gens = unit_group_generators(pk);
    // Closure of {1} under multiplication by generators and their inverses.
    std::vector<char> seen(static_cast<size_t>(pk.q), 0);
    std::vector<i64> frontier = {1};
    seen[1] = 1;
    size_t total = 1;
    while (!frontier.empty()) {
      std::vector<i64> next;
      for (i64 x : frontier)
        for (i64 g : gens)
          for (i64 y : {mul_mod(x, g, pk.q), mul_mod(x, inv_mod(g, pk.q), pk.q)})
            if (!seen[static_cast<size_t>(y)]) {
              seen[static_cast<size_t>(y)] = 1;
              ++total;
              next.push_back(y);
            }
      frontier = std::move(next);
    }
    CHECK(total == unit_residues(pk).size());
  }
}

TEST_CASE("directed congruence systems") {
  // 6x == 4 (mod 8) is solvable with period 4.
  auto sol = solve_scaled_linear(6, 4, PrimePower(2, 3));
  REQUIRE(sol.has_value());
  CHECK(mod_reduce(sol->base * 6, 8) == 4);
  CHECK(mod_reduce((sol->base + sol->period) * 6, 8) == 4);
  CHECK_FALSE(solve_scaled_linear(2, 1, PrimePower(2, 3)).has_value());

  // Compatible pair picks the smallest nonnegative common solution.
  auto sys = solve_directed_system({{3, 6}, {1, 2}}, PrimePower(3, 2));
  REQUIRE(sys.has_value());
  CHECK(mod_reduce(*sys * 3, 9) == 6);
  CHECK(mod_reduce(*sys, 9) == 2);

  // Incompatible system has no solution.
  CHECK_FALSE(solve_directed_system({{2, 1}, {2, 3}}, PrimePower(2, 2)).has_value());
}

TEST_CASE("rational helpers") {
  Rat a(3, -6);
  CHECK(a.num == -1);
  CHECK(a.den == 2);
  CHECK(rat_val(Rat(18, 5), 3) == 2);
  CHECK(rat_val(Rat(5, 9), 3) == -2);
  CHECK(rat_val(Rat(0), 3) == VAL_INF);
  CHECK(rat_frac(Rat(-7, 4)) == Rat(1, 4));
  CHECK(rat_floor(Rat(-7, 4)) == -2);
  CHECK(rat_pow(3, -2) == Rat(1, 9));
  CHECK(rat_inv(Rat(-2, 5)) == Rat(-5, 2));
}

#pragma once

// Exact evaluation of the eight Weyl-cell Kloosterman sums from their
// explicit congruence parametrizations, plus the classical sums they reduce
// to (GL(2) Kloosterman, Ramanujan, quadratic Gauss).

#include <vector>

#include "klsp4/sp4.hpp"
#include "klsp4/tally.hpp"

namespace klsp4 {

struct KloostermanValue {
  CyclotomicTally tally;
  i64 term_count = 0;
  // Enumerated tuples passing all stated side conditions whose implicit
  // (hat-variable) congruence systems turned out unsolvable.  Expected to be
  // zero everywhere; asserted against the oracle.
  i64 skipped_unsolvable = 0;
};

// Term budget; evaluators throw budget_error once exhausted.
class Budget {
 public:
  explicit Budget(i64 limit) : remaining_(limit) {}
  void charge(i64 n = 1) {
    remaining_ -= n;
    if (remaining_ < 0) throw budget_error("term budget exhausted");
  }

 private:
  i64 remaining_;
};

// Default budget: KLSP4_BUDGET env var, else 200 million charged steps.
i64 default_term_budget();

// S(m, n; q) = sum over x with x*y == 1 mod q of e((m*x + n*y)/q).
// q must be 1 or a prime power (the tally type carries p-power conductors).
CyclotomicTally gl2_kloosterman(i64 m, i64 n, i64 q);

// Ramanujan sum c_q(m); q must be 1 or a prime power.
CyclotomicTally ramanujan(i64 q, i64 m);

// Quadratic Gauss sum: sum over x mod p^k of e(a*x^2/p^k).
CyclotomicTally gauss_quadratic(i64 a, const PrimePower& pk);

// Dispatcher over the eight cells.
KloostermanValue kl(const CellParams& c, const CharacterPair& ch);
KloostermanValue kl(const CellParams& c, const CharacterPair& ch, Budget& budget);

// Product of local sums over distinct primes.
struct GlobalValue {
  std::vector<std::pair<CellParams, KloostermanValue>> locals;
  double magnitude = 1.0;
};
GlobalValue kl_global(const std::vector<std::pair<CellParams, CharacterPair>>& cells);

}  // namespace klsp4

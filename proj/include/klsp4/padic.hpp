#pragma once

// Modular / p-adic arithmetic atoms: valuations, inverses, unit groups, and
// solvers for scaled linear congruences a*x = b (mod p^k) and small systems
// thereof.  All arithmetic is exact; intermediate products go through 128-bit
// integers and moduli are restricted to fit in a signed 64-bit integer.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace klsp4 {

using i64 = long long;
using i128 = __int128;

// Sentinel valuation for zero (morally +infinity).
inline constexpr int VAL_INF = 1 << 28;

// Thrown when an input is outside the supported domain (non-prime p,
// modulus overflow, non-invertible element, inadmissible cell, ...).
class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when a term budget is exhausted mid-computation.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(i64 p);

// p^k as i64; throws domain_error if k < 0 or the power exceeds 2^62.
i64 checked_pow(i64 p, int k);

// Exponent of the largest power of p dividing x (VAL_INF for x == 0).
int valuation(i64 x, i64 p);

// Canonical representative of x in [0, m).
i64 mod_reduce(i64 x, i64 m);

i64 mul_mod(i64 a, i64 b, i64 m);
i64 pow_mod(i64 a, i64 e, i64 m);

// Inverse of a modulo m (gcd(a, m) must be 1; m == 1 returns 0).
i64 inv_mod(i64 a, i64 m);
bool has_inverse(i64 a, i64 m);

// A prime-power modulus p^k.  k == 0 (modulus 1) is allowed and gives the
// trivial ring, whose unit group we represent by the single residue 0.
struct PrimePower {
  i64 p;
  int k;
  i64 q;  // p^k

  PrimePower(i64 p_, int k_);
  bool trivial() const { return k == 0; }
};

// All unit residues modulo p^k in increasing order ({0} when k == 0).
std::vector<i64> unit_residues(const PrimePower& pk);

// Generators of the unit group (Z/p^k)^x.  Empty when the group is trivial.
std::vector<i64> unit_group_generators(const PrimePower& pk);

// Solution set of a*x = b (mod p^k): an arithmetic progression
// { base + t*period : t } of residues mod p^k, with period a power of p.
struct LinearSolution {
  i64 base;    // smallest nonnegative solution
  i64 period;  // p^(k - min(val(a), k))
};

// Solves a*x = b (mod p^k).  Solvable iff p^val(a) divides b; returns
// nullopt otherwise.  a == 0 yields the full progression when b == 0.
std::optional<LinearSolution> solve_scaled_linear(i64 a, i64 b, const PrimePower& pk);

// Intersects the solution sets of several scaled linear congruences
// { (a_i, b_i) : a_i * x = b_i (mod p^k) } and returns the progression of
// common solutions, or nullopt if the system is inconsistent.
std::optional<LinearSolution> solve_directed_progression(
    const std::vector<std::pair<i64, i64>>& eqs, const PrimePower& pk);

// As above but returns only the smallest nonnegative common solution.
std::optional<i64> solve_directed_system(const std::vector<std::pair<i64, i64>>& eqs,
                                         const PrimePower& pk);

}  // namespace klsp4

#pragma once

// Exact arithmetic with finite sums of p^L-th roots of unity.
//
// A CyclotomicTally stores one signed integer count per residue t in
// [0, p^L): the represented value is sum_t c_t * e(t / p^L).  The only
// Z-linear relations among p^L-th roots of unity are generated by the p-term
// orbit relations sum_{j<p} e((t + j*p^(L-1)) / p^L) = 0, whose supports are
// disjoint; zeroing one fixed slot per orbit therefore yields a unique
// normal form, and equality of represented values is exact count equality
// after normalization.

#include <cstdint>
#include <vector>

#include "klsp4/padic.hpp"
#include "klsp4/rational.hpp"

namespace klsp4 {

// The fraction num / p^level taken mod 1, with 0 <= num < p^level.
struct PhaseFrac {
  i64 num = 0;
  int level = 0;
};

// Converts a rational to a PhaseFrac; the denominator must be a power of p.
PhaseFrac phase_from_rat(const Rat& x, i64 p);

class CyclotomicTally;

// Exact product of two represented values (convolution of counts); both
// operands must share the same prime.
CyclotomicTally tally_product(const CyclotomicTally& a, const CyclotomicTally& b);

class CyclotomicTally {
 public:
  explicit CyclotomicTally(i64 p, int level = 0);

  // The constant integer value as a level-0 tally.
  static CyclotomicTally integer(i64 p, i64 value);

  i64 prime() const { return p_; }
  int level() const { return level_; }
  const std::vector<i64>& counts() const { return counts_; }

  // Adds weight * e(phase.num / p^phase.level); lifts the level as needed.
  void add_phase(PhaseFrac phase, i64 weight = 1);
  void add(const CyclotomicTally& other);
  void negate();
  void scale(i64 factor);

  // Raises the working level (each residue t becomes t * p^(delta)).
  void lift_to(int new_level);

  // Unique normal form: the last slot of each orbit zeroed, then the level
  // lowered as far as the support allows.
  CyclotomicTally canonical() const;

  // Exact equality of the represented algebraic numbers.
  bool equals(const CyclotomicTally& other) const;
  bool is_zero() const;

  // Divides by a nonzero integer; throws domain_error unless the quotient is
  // again an integer combination of roots of unity.
  CyclotomicTally exact_divide(i64 d) const;

  // |value| in double precision computed from the canonical counts.
  double magnitude() const;

  // FNV-1a hash of (p, level, counts) of the canonical form.
  std::uint64_t digest() const;

 private:
  i64 p_;
  int level_;
  std::vector<i64> counts_;  // size p_^level_
};

}  // namespace klsp4

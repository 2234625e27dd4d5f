#pragma once

// Auxiliary Kloosterman sums: the character-compatibility criterion on the
// roots kept on the same side by the cell, the per-cell condition table, and
// the auxiliary sum itself (equal to the ordinary sum when compatible, zero
// otherwise).

#include <string>
#include <vector>

#include "klsp4/sp4.hpp"
#include "klsp4/sums.hpp"

namespace klsp4 {

// For one root gamma kept on the same side: conjugating the one-parameter
// element u_gamma(tau) by n multiplies the two character-carrying
// coordinates by fixed rationals.  The compatibility criterion for gamma is
//   m1*lhs_m1 + m2*lhs_m2 = n1*rhs_n1 + n2*rhs_n2  (as rationals).
struct RootFlow {
  Root gamma;
  Rat lhs_m1, lhs_m2;  // coefficients of m1, m2 on the conjugated side
  Rat rhs_n1, rhs_n2;  // coefficients of n1, n2 on the original side
};

std::vector<RootFlow> ubar_root_flows(const CellParams& c);

bool is_well_defined(const CellParams& c, const CharacterPair& ch);

// If well-defined, the ordinary sum; otherwise the zero tally.
KloostermanValue aux_kl(const CellParams& c, const CharacterPair& ch);

// One row of the condition table, with the p-exponents written as affine
// functions of (r, s) (fitted exactly from several admissible cells).
struct ConditionTableRow {
  std::string w;
  std::string condition;             // e.g. "m2 = n1 = 0" or "n1 = m1 p^(s-2r)"
  std::vector<std::string> clauses;  // machine-readable conjuncts
};

std::vector<ConditionTableRow> condition_table();

// Serializes the table as JSON (one object per row).
std::string condition_table_json();

}  // namespace klsp4

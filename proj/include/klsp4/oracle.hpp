#pragma once

// Independent brute-force enumeration of the double-coset set
// X(n) = U(Z_p) \ (U n U intersect G(Z_p)) / U_n(Z_p), straight from the
// definition: scan slice representatives u' (coordinates only on the roots
// carried to the transposed side, on a p-power grid in [0,1)) and for each
// scan canonical u representatives row by row with early integrality
// pruning.  Each (u, u') pair found is the unique canonical representative of
// its double coset, so the enumeration is duplicate-free by construction.

#include <map>
#include <vector>

#include "klsp4/sp4.hpp"
#include "klsp4/sums.hpp"

namespace klsp4 {

struct OracleCell {
  UnipotentCoords u;                // coordinates in [0,1)
  std::array<Rat, 4> uprime{};      // slice coordinates per Root index

  PhaseFrac phase(const CharacterPair& ch, i64 p) const;
};

bool operator<(const OracleCell& a, const OracleCell& b);
bool operator==(const OracleCell& a, const OracleCell& b);

// Extra levels added on top of the structural per-root denominator caps.
struct DenominatorCap {
  int extra = 0;
};

// Structural denominator cap (exponent of p) for each slice root of the cell.
std::map<Root, int> slice_caps(const CellParams& c);

// Enumeration against an explicit cell matrix (used for torus-twisted cells;
// shape (w, r, s) still controls the slice grid).
std::vector<OracleCell> enumerate_X_matrix(const Mat4& n, const CellParams& shape,
                                           DenominatorCap cap, Budget& budget);

std::vector<OracleCell> enumerate_X(const CellParams& c, DenominatorCap cap = {});
std::vector<OracleCell> enumerate_X(const CellParams& c, DenominatorCap cap,
                                    Budget& budget);

KloostermanValue oracle_kl_from_cells(const std::vector<OracleCell>& cells,
                                      const CellParams& c, const CharacterPair& ch);
KloostermanValue oracle_kl(const CellParams& c, const CharacterPair& ch);

// True iff enumeration with the structural caps and with one extra level
// produce identical cell sets.
bool certify_cap_closure(const CellParams& c, DenominatorCap base = {});

// Left twist: Kl(t n, psi, psi') vs Kl(n, psi_t, psi').
bool check_torus_twist_left(const CellParams& c, const CharacterPair& ch,
                            const TorusUnits& t);
// Right twist: Kl(n t^{-1}, psi, psi') vs Kl(n, psi, psi'_t).
bool check_torus_twist_right(const CellParams& c, const CharacterPair& ch,
                             const TorusUnits& t);

}  // namespace klsp4

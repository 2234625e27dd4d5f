#pragma once

// Near-diagonal scaling action on X(n), its orbit decomposition, the group
// V_w(l) of realized character scalings, and the resulting orbit-sum identity
// for the Kloosterman sum.

#include <vector>

#include "klsp4/oracle.hpp"
#include "klsp4/sp4.hpp"

namespace klsp4 {

// diag(a1, a2, c*a1^{-1}, c*a2^{-1}) with a1, a2, c units mod p^l.
struct TorusElement {
  i64 a1 = 1, a2 = 1, c = 1;
};

// t * x = (t u t^{-1}) n (s u' s^{-1}) with s = n^{-1} t n, reduced back to
// canonical slice coordinates.  level.q must be a multiple of every
// coordinate denominator of x.
OracleCell torus_act(const TorusElement& t, const OracleCell& x, const CellParams& c,
                     const PrimePower& level);

// (kappa1, kappa2, kappa1', kappa2') = superdiagonal coordinates of u and u'.
std::array<Rat, 4> kappa(const OracleCell& x);

// A realized scaling tuple: lambda for the u side, lambda' (per simple root
// in Delta_w) for the u' side.  Components are units mod p^l; absent
// Delta_w components are 0.
struct VwElement {
  i64 l1 = 1, l2 = 1;
  i64 lp1 = 0, lp2 = 0;
};

// All distinct scaling tuples realized by the torus action at this level;
// the count is always phi(p^l)^2.  Results are memoized per (w, p, l).
const std::vector<VwElement>& enumerate_Vw(Weyl w, const PrimePower& level);

// Phase data of the character theta_x: c1 = m1*kappa1, c2 = m2*kappa2,
// c3 = n1*kappa1' (only if alpha is in Delta_w), c4 = n2*kappa2' (beta).
struct ThetaData {
  PhaseFrac c1, c2, c3, c4;
};

ThetaData theta_of(const OracleCell& x, const CharacterPair& ch, const CellParams& c);

// S_w(theta; l) = sum over V_w(l) of theta(v), exactly.
CyclotomicTally eval_Sw(const ThetaData& theta, Weyl w, const PrimePower& level);

// Orbit decomposition of the given cells under the scaling action mod p^l:
// (representative, orbit size) pairs.
std::vector<std::pair<OracleCell, i64>> torus_orbits(const std::vector<OracleCell>& cells,
                                                     const CellParams& c,
                                                     const PrimePower& level);

// Checks Kl = phi(p^l)^{-2} * sum over orbit representatives of
// N(x) * S_w(theta_x; l) as an exact tally identity.  Throws domain_error if
// the normalizing division is not exact.
bool stevens_identity_check(const CellParams& c, const CharacterPair& ch, int level);

// Same, with the orbit decomposition (at the same level) and the evaluated
// left-hand side supplied by the caller so they can be reused across
// characters.
bool stevens_identity_check(const CellParams& c, const CharacterPair& ch, int level,
                            const std::vector<std::pair<OracleCell, i64>>& orbits,
                            const CyclotomicTally& kl_tally);

}  // namespace klsp4

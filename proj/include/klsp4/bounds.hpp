#pragma once

// Magnitude bounds for the cell sums: the trivial term-count bound, the
// classical GL(2) bound, and the sharper per-cell bounds.

#include <string>

#include "klsp4/sp4.hpp"

namespace klsp4 {

enum class BoundId { Trivial, Weil, Ab, Ba, Aba, Bab, W0 };

std::string bound_name(BoundId id);
BoundId bound_from_name(const std::string& name);

// The bound normally quoted for each cell type.
BoundId default_bound_for(Weyl w);

// |S(m, n; p^k)| <= 2 p^{k/2} gcd(m, n, p^k)^{1/2} (and = 1 for k = 0).
double weil_gl2_bound(i64 m, i64 n, const PrimePower& pk);

// Evaluates the requested bound for the cell; throws domain_error if the
// bound does not apply to the cell's type.
double bound_value(BoundId id, const CellParams& c, const CharacterPair& ch);

}  // namespace klsp4

#pragma once

// Group-theoretic scaffolding for Sp(4): Weyl words, cell matrices, the
// unipotent parametrization and its root coordinates, character evaluation,
// and the partition of positive roots induced by each Weyl word.
//
// Conventions.  G = Sp(4) preserves the form J with J[i][3-i] = +-1.  The
// unipotent radical U is parametrized by four root coordinates
// (a1, a2, a4, a5) attached to the positive roots
//   alpha (short simple), 2*alpha+beta, alpha+beta, beta (long simple),
// assembled as
//   [[1, a1, a2, a4 + a1*a5],
//    [0,  1, a4, a5        ],
//    [0,  0,  1, 0         ],
//    [0,  0,-a1, 1         ]].
// The character psi_{m1,m2} reads e(m1*a1 + m2*a5).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "klsp4/rational.hpp"
#include "klsp4/tally.hpp"

namespace klsp4 {

enum class Weyl { Id, A, B, AB, BA, ABA, BAB, W0 };

inline constexpr std::array<Weyl, 8> ALL_WEYL = {Weyl::Id,  Weyl::A,   Weyl::B,
                                                 Weyl::AB,  Weyl::BA,  Weyl::ABA,
                                                 Weyl::BAB, Weyl::W0};

// Short names "id", "a", "b", "ab", "ba", "aba", "bab", "w0": the letters are
// the simple reflections applied left to right.
const char* weyl_name(Weyl w);
std::optional<Weyl> weyl_from_name(const std::string& name);

// The four positive roots, indexed in coordinate order (a1, a2, a4, a5).
enum class Root : int { Alpha = 0, TwoAlphaBeta = 1, AlphaBeta = 2, Beta = 3 };

inline constexpr std::array<Root, 4> ALL_ROOTS = {Root::Alpha, Root::TwoAlphaBeta,
                                                  Root::AlphaBeta, Root::Beta};
const char* root_name(Root g);

struct CharacterPair {
  i64 m1 = 0, m2 = 0, n1 = 0, n2 = 0;
};

// True iff (r, s) is an admissible exponent pair for the cell of w.
bool admissible(Weyl w, int r, int s);

struct CellParams {
  Weyl w;
  i64 p;
  int r, s;

  // Validates primality and admissibility; throws domain_error naming the
  // violated constraint.
  CellParams(Weyl w_, i64 p_, int r_, int s_);
};

using Mat4 = std::array<std::array<Rat, 4>, 4>;

Mat4 mat_identity();
Mat4 mat_mul(const Mat4& a, const Mat4& b);
Mat4 mat_inverse(const Mat4& a);
Mat4 mat_transpose(const Mat4& a);
bool mat_equal(const Mat4& a, const Mat4& b);

// Exact check of M^T J M = J.
bool is_symplectic(const Mat4& m);
// All entries have nonnegative p-adic valuation.
bool is_p_integral(const Mat4& m, i64 p);

struct UnipotentCoords {
  Rat a1, a2, a4, a5;

  Rat coord(Root g) const;
  void set_coord(Root g, const Rat& v);
};

Mat4 unipotent_matrix(const UnipotentCoords& u);

// Product in U: coords(a) * coords(b) via the group law.
UnipotentCoords unipotent_mul(const UnipotentCoords& a, const UnipotentCoords& b);

// Splits u as g * d with g having integer coordinates and d coordinates in
// [0,1); returns d (the canonical representative of U(Z_p) \ U(Q_p)).
UnipotentCoords reduce_left(const UnipotentCoords& u);
// Splits u as d * h with h integral and d coordinates in [0,1); returns d
// (canonical representative of U(Q_p) / U(Z_p)).
UnipotentCoords reduce_right(const UnipotentCoords& u);

// The matrix n_{w,r,s}: the signed-permutation representative of w scaled by
// diag(p^{-r}, p^{r-s}, p^r, p^{s-r}).
Mat4 cell_matrix(const CellParams& c);

// e(m1 * a1 + m2 * a5) as an exact fraction mod 1.
PhaseFrac psi_value(const UnipotentCoords& u, i64 m1, i64 m2, i64 p);

// Positive roots gamma with n u_gamma n^{-1} in the transposed unipotent
// group (the side that carries the second character's free coordinates).
std::vector<Root> uw_roots(Weyl w);
// Complement: roots kept on the same side by conjugation.
std::vector<Root> ubar_roots(Weyl w);
// Simple roots (alpha, beta) contained in uw_roots(w).
std::vector<Root> delta_w(Weyl w);

// For t = diag(t1, t2, c/t1, c/t2) and s = n^{-1} t n (again diagonal of that
// shape), s_i = t_{perm[i]}: the permutation depends only on w.
std::array<int, 4> weyl_diag_permutation(Weyl w);

// Units (t1, t2) describing the symplectic torus element
// diag(t1, t2, t1^{-1}, t2^{-1}).
struct TorusUnits {
  i64 t1 = 1, t2 = 1;
};

// Character data of u |-> psi(t u t^{-1}): (m1*t1*t2^{-1}, m2*t2^2) mod p^K.
std::pair<i64, i64> twist_character(const TorusUnits& t, i64 m1, i64 m2,
                                    const PrimePower& pk);

// Exact rational matrix diag(t1, t2, 1/t1, 1/t2).
Mat4 torus_matrix(const TorusUnits& t);

}  // namespace klsp4

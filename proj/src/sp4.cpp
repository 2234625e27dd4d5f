#include "klsp4/sp4.hpp"

#include <map>

namespace klsp4 {

namespace {
const std::array<const char*, 8> WEYL_NAMES = {"id", "a",   "b",   "ab",
                                               "ba", "aba", "bab", "w0"};
}

const char* weyl_name(Weyl w) { return WEYL_NAMES[static_cast<int>(w)]; }

std::optional<Weyl> weyl_from_name(const std::string& name) {
  for (int i = 0; i < 8; ++i)
    if (name == WEYL_NAMES[i]) return static_cast<Weyl>(i);
  return std::nullopt;
}

const char* root_name(Root g) {
  switch (g) {
    case Root::Alpha: return "alpha";
    case Root::TwoAlphaBeta: return "2alpha+beta";
    case Root::AlphaBeta: return "alpha+beta";
    case Root::Beta: return "beta";
  }
  return "?";
}

bool admissible(Weyl w, int r, int s) {
  if (r < 0 || s < 0) return false;
  switch (w) {
    case Weyl::Id: return r == 0 && s == 0;
    case Weyl::A: return s == 0;
    case Weyl::B: return r == 0;
    case Weyl::AB: return s <= r;
    case Weyl::BA: return 2 * r <= s;
    case Weyl::ABA: return s <= 2 * r;
    case Weyl::BAB: return r <= s;
    case Weyl::W0: return true;
  }
  return false;
}

CellParams::CellParams(Weyl w_, i64 p_, int r_, int s_) : w(w_), p(p_), r(r_), s(s_) {
  if (!is_prime(p)) throw domain_error("CellParams: p must be prime");
  if (r < 0 || s < 0) throw domain_error("CellParams: exponents must be nonnegative");
  if (!admissible(w, r, s)) {
    std::string why;
    switch (w) {
      case Weyl::Id: why = "id requires r = s = 0"; break;
      case Weyl::A: why = "cell a requires s = 0"; break;
      case Weyl::B: why = "cell b requires r = 0"; break;
      case Weyl::AB: why = "cell ab requires s <= r"; break;
      case Weyl::BA: why = "cell ba requires 2r <= s"; break;
      case Weyl::ABA: why = "cell aba requires s <= 2r"; break;
      case Weyl::BAB: why = "cell bab requires r <= s"; break;
      default: why = "inadmissible"; break;
    }
    throw domain_error("CellParams: " + why);
  }
}

Mat4 mat_identity() {
  Mat4 m{};
  for (int i = 0; i < 4; ++i) m[i][i] = Rat(1);
  return m;
}

Mat4 mat_mul(const Mat4& a, const Mat4& b) {
  Mat4 out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Rat acc;
      for (int k = 0; k < 4; ++k) acc = acc + a[i][k] * b[k][j];
      out[i][j] = acc;
    }
  return out;
}

Mat4 mat_transpose(const Mat4& a) {
  Mat4 out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = a[j][i];
  return out;
}

bool mat_equal(const Mat4& a, const Mat4& b) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (a[i][j] != b[i][j]) return false;
  return true;
}

Mat4 mat_inverse(const Mat4& a) {
  // Gauss-Jordan over exact rationals.
  std::array<std::array<Rat, 8>, 4> m{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m[i][j] = a[i][j];
    m[i][4 + i] = Rat(1);
  }
  for (int col = 0; col < 4; ++col) {
    int piv = -1;
    for (int i = col; i < 4; ++i)
      if (m[i][col].num != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw domain_error("mat_inverse: singular matrix");
    std::swap(m[col], m[piv]);
    Rat d = m[col][col];
    for (int j = 0; j < 8; ++j) m[col][j] = m[col][j] / d;
    for (int i = 0; i < 4; ++i) {
      if (i == col || m[i][col].num == 0) continue;
      Rat f = m[i][col];
      for (int j = 0; j < 8; ++j) m[i][j] = m[i][j] - f * m[col][j];
    }
  }
  Mat4 out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = m[i][4 + j];
  return out;
}

bool is_symplectic(const Mat4& m) {
  // The invariant form pairs coordinate slots (0,2) and (1,3).
  Mat4 j{};
  j[0][2] = Rat(1);
  j[1][3] = Rat(1);
  j[2][0] = Rat(-1);
  j[3][1] = Rat(-1);
  return mat_equal(mat_mul(mat_mul(mat_transpose(m), j), m), j);
}

bool is_p_integral(const Mat4& m, i64 p) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (m[i][j].num != 0 && rat_val(m[i][j], p) < 0) return false;
  return true;
}

Rat UnipotentCoords::coord(Root g) const {
  switch (g) {
    case Root::Alpha: return a1;
    case Root::TwoAlphaBeta: return a2;
    case Root::AlphaBeta: return a4;
    case Root::Beta: return a5;
  }
  return Rat();
}

void UnipotentCoords::set_coord(Root g, const Rat& v) {
  switch (g) {
    case Root::Alpha: a1 = v; break;
    case Root::TwoAlphaBeta: a2 = v; break;
    case Root::AlphaBeta: a4 = v; break;
    case Root::Beta: a5 = v; break;
  }
}

Mat4 unipotent_matrix(const UnipotentCoords& u) {
  Mat4 m = mat_identity();
  m[0][1] = u.a1;
  m[0][2] = u.a2;
  m[0][3] = u.a4 + u.a1 * u.a5;
  m[1][2] = u.a4;
  m[1][3] = u.a5;
  m[3][2] = -u.a1;
  return m;
}

UnipotentCoords unipotent_mul(const UnipotentCoords& a, const UnipotentCoords& b) {
  UnipotentCoords out;
  out.a1 = a.a1 + b.a1;
  out.a2 = a.a2 + b.a2 + a.a1 * b.a4 - (a.a4 + a.a1 * a.a5) * b.a1;
  out.a4 = a.a4 + b.a4 - a.a5 * b.a1;
  out.a5 = a.a5 + b.a5;
  return out;
}

namespace {
Rat frac_and_int(const Rat& x, Rat& integral) {
  i64 fl = rat_floor(x);
  integral = Rat(fl);
  return x - Rat(fl);
}
}  // namespace

UnipotentCoords reduce_left(const UnipotentCoords& u) {
  // u = g * d with g integral: solve coordinate by coordinate.
  Rat g1, g4, g5;
  UnipotentCoords d;
  d.a1 = frac_and_int(u.a1, g1);
  d.a5 = frac_and_int(u.a5, g5);
  Rat tmp;
  d.a4 = frac_and_int(u.a4 + g5 * d.a1, g4);
  d.a2 = frac_and_int(u.a2 - g1 * d.a4 + (g4 + g1 * g5) * d.a1, tmp);
  return d;
}

UnipotentCoords reduce_right(const UnipotentCoords& u) {
  // u = d * h with h integral.
  Rat h1, h4, h5;
  UnipotentCoords d;
  d.a1 = frac_and_int(u.a1, h1);
  d.a5 = frac_and_int(u.a5, h5);
  Rat tmp;
  d.a4 = frac_and_int(u.a4 + d.a5 * h1, h4);
  d.a2 = frac_and_int(u.a2 - d.a1 * h4 + (d.a4 + d.a1 * d.a5) * h1, tmp);
  return d;
}

Mat4 cell_matrix(const CellParams& c) {
  const i64 p = c.p;
  const int r = c.r, s = c.s;
  auto P = [p](int e) { return rat_pow(p, e); };
  Mat4 m{};
  switch (c.w) {
    case Weyl::Id:
      return mat_identity();
    case Weyl::A:
      m[0][1] = P(-r);
      m[1][0] = -P(r);
      m[2][3] = P(r);
      m[3][2] = -P(-r);
      return m;
    case Weyl::B:
      m[0][0] = Rat(1);
      m[1][3] = P(-s);
      m[2][2] = Rat(1);
      m[3][1] = -P(s);
      return m;
    case Weyl::AB:
      m[0][3] = -P(-r);
      m[1][0] = P(r - s);
      m[2][1] = P(r);
      m[3][2] = P(s - r);
      return m;
    case Weyl::BA:
      m[0][1] = P(-r);
      m[1][2] = P(r - s);
      m[2][3] = P(r);
      m[3][0] = -P(s - r);
      return m;
    case Weyl::ABA:
      m[0][2] = -P(-r);
      m[1][1] = P(r - s);
      m[2][0] = P(r);
      m[3][3] = P(s - r);
      return m;
    case Weyl::BAB:
      m[0][3] = -P(-r);
      m[1][2] = P(r - s);
      m[2][1] = P(r);
      m[3][0] = -P(s - r);
      return m;
    case Weyl::W0:
      m[0][2] = -P(-r);
      m[1][3] = -P(r - s);
      m[2][0] = P(r);
      m[3][1] = P(s - r);
      return m;
  }
  throw domain_error("cell_matrix: unknown Weyl word");
}

PhaseFrac psi_value(const UnipotentCoords& u, i64 m1, i64 m2, i64 p) {
  return phase_from_rat(Rat(m1) * u.a1 + Rat(m2) * u.a5, p);
}

namespace {

// Membership in U: unit diagonal, zeros below the diagonal pattern, and the
// two entry constraints of the coordinate form.
bool is_in_U(const Mat4& m) {
  for (int i = 0; i < 4; ++i)
    if (m[i][i] != Rat(1)) return false;
  const int zeros[6][2] = {{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {2, 3}};
  for (auto& z : zeros)
    if (m[z[0]][z[1]].num != 0) return false;
  return m[3][2] == -m[0][1] && m[0][3] == m[1][2] + m[0][1] * m[1][3];
}

std::vector<Root> compute_uw_roots(Weyl w) {
  // Representative admissible exponents per cell; the split depends only on w.
  static const std::map<Weyl, std::pair<int, int>> rep = {
      {Weyl::Id, {0, 0}}, {Weyl::A, {1, 0}},   {Weyl::B, {0, 1}},
      {Weyl::AB, {1, 0}}, {Weyl::BA, {0, 2}},  {Weyl::ABA, {1, 1}},
      {Weyl::BAB, {1, 1}}, {Weyl::W0, {1, 1}}};
  auto [r, s] = rep.at(w);
  Mat4 n = cell_matrix(CellParams(w, 3, r, s));
  Mat4 ninv = mat_inverse(n);
  std::vector<Root> out;
  for (Root g : ALL_ROOTS) {
    UnipotentCoords u;
    u.set_coord(g, Rat(1));
    Mat4 conj = mat_mul(mat_mul(n, unipotent_matrix(u)), ninv);
    if (is_in_U(mat_transpose(conj))) out.push_back(g);
  }
  return out;
}

}  // namespace

std::vector<Root> uw_roots(Weyl w) {
  static std::map<Weyl, std::vector<Root>> cache;
  auto it = cache.find(w);
  if (it == cache.end()) it = cache.emplace(w, compute_uw_roots(w)).first;
  return it->second;
}

std::vector<Root> ubar_roots(Weyl w) {
  std::vector<Root> uw = uw_roots(w);
  std::vector<Root> out;
  for (Root g : ALL_ROOTS) {
    bool in = false;
    for (Root h : uw)
      if (h == g) in = true;
    if (!in) out.push_back(g);
  }
  return out;
}

std::vector<Root> delta_w(Weyl w) {
  std::vector<Root> out;
  for (Root g : uw_roots(w))
    if (g == Root::Alpha || g == Root::Beta) out.push_back(g);
  return out;
}

std::array<int, 4> weyl_diag_permutation(Weyl w) {
  // Conjugate a marker diagonal by the r = s = 0 representative and track
  // where each entry lands.
  Mat4 n = cell_matrix(CellParams(w, 3, 0, 0));
  Mat4 ninv = mat_inverse(n);
  const std::array<i64, 4> markers = {2, 3, 5, 7};
  Mat4 t{};
  for (int i = 0; i < 4; ++i) t[i][i] = Rat(markers[i]);
  Mat4 s = mat_mul(mat_mul(ninv, t), n);
  std::array<int, 4> perm{};
  for (int i = 0; i < 4; ++i) {
    bool found = false;
    for (int j = 0; j < 4; ++j)
      if (s[i][i] == Rat(markers[j])) {
        perm[i] = j;
        found = true;
      }
    if (!found) throw domain_error("weyl_diag_permutation: non-diagonal conjugate");
  }
  return perm;
}

std::pair<i64, i64> twist_character(const TorusUnits& t, i64 m1, i64 m2,
                                    const PrimePower& pk) {
  if (t.t1 % pk.p == 0 || t.t2 % pk.p == 0)
    throw domain_error("twist_character: torus entries must be units");
  i64 q = pk.q;
  i64 m1t = mul_mod(mod_reduce(m1, q), mul_mod(t.t1, inv_mod(t.t2, q), q), q);
  i64 m2t = mul_mod(mod_reduce(m2, q), mul_mod(t.t2, t.t2, q), q);
  return {m1t, m2t};
}

Mat4 torus_matrix(const TorusUnits& t) {
  Mat4 m{};
  m[0][0] = Rat(t.t1);
  m[1][1] = Rat(t.t2);
  m[2][2] = Rat(1, t.t1);
  m[3][3] = Rat(1, t.t2);
  return m;
}

}  // namespace klsp4

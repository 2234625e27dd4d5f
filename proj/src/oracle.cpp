#include "klsp4/oracle.hpp"

#include <algorithm>

namespace klsp4 {

namespace {

bool rat_less(const Rat& a, const Rat& b) {
  return static_cast<i128>(a.num) * b.den < static_cast<i128>(b.num) * a.den;
}

std::array<Rat, 8> cell_key(const OracleCell& c) {
  return {c.u.a1, c.u.a2, c.u.a4, c.u.a5, c.uprime[0], c.uprime[1], c.uprime[2],
          c.uprime[3]};
}

bool row_p_integral(const std::array<Rat, 4>& row, i64 p) {
  for (const Rat& x : row)
    if (x.num != 0 && rat_val(x, p) < 0) return false;
  return true;
}

}  // namespace

bool operator<(const OracleCell& a, const OracleCell& b) {
  auto ka = cell_key(a), kb = cell_key(b);
  for (int i = 0; i < 8; ++i) {
    if (ka[i] != kb[i]) return rat_less(ka[i], kb[i]);
  }
  return false;
}

bool operator==(const OracleCell& a, const OracleCell& b) {
  return cell_key(a) == cell_key(b);
}

PhaseFrac OracleCell::phase(const CharacterPair& ch, i64 p) const {
  Rat total = Rat(ch.m1) * u.a1 + Rat(ch.m2) * u.a5 +
              Rat(ch.n1) * uprime[static_cast<int>(Root::Alpha)] +
              Rat(ch.n2) * uprime[static_cast<int>(Root::Beta)];
  return phase_from_rat(total, p);
}

std::map<Root, int> slice_caps(const CellParams& c) {
  const int r = c.r, s = c.s;
  switch (c.w) {
    case Weyl::Id: return {};
    case Weyl::A: return {{Root::Alpha, r}};
    case Weyl::B: return {{Root::Beta, s}};
    case Weyl::AB: return {{Root::AlphaBeta, r}, {Root::Beta, s}};
    case Weyl::BA: return {{Root::Alpha, r}, {Root::TwoAlphaBeta, s}};
    case Weyl::ABA:
      return {{Root::Alpha, s / 2}, {Root::TwoAlphaBeta, r}, {Root::AlphaBeta, r}};
    case Weyl::BAB:
      return {{Root::Beta, r}, {Root::AlphaBeta, r}, {Root::TwoAlphaBeta, s}};
    case Weyl::W0:
      return {{Root::Alpha, r},
              {Root::TwoAlphaBeta, r},
              {Root::AlphaBeta, s},
              {Root::Beta, s}};
  }
  return {};
}

std::vector<OracleCell> enumerate_X_matrix(const Mat4& n, const CellParams& shape,
                                           DenominatorCap cap, Budget& budget) {
  const i64 p = shape.p;
  const std::vector<Root> roots = uw_roots(shape.w);
  const std::map<Root, int> caps = slice_caps(shape);

  // Grids of fractional representatives per slice root.
  std::vector<std::vector<Rat>> grids;
  for (Root g : roots) {
    int level = caps.count(g) ? caps.at(g) : 0;
    level += cap.extra;
    i64 q = checked_pow(p, level);
    std::vector<Rat> grid;
    grid.reserve(static_cast<size_t>(q));
    for (i64 t = 0; t < q; ++t) grid.emplace_back(t, q);
    grids.push_back(std::move(grid));
  }
  const int ucap = std::max(shape.r, shape.s);
  const i64 uq = checked_pow(p, ucap);
  std::vector<Rat> ugrid;
  ugrid.reserve(static_cast<size_t>(uq));
  for (i64 t = 0; t < uq; ++t) ugrid.emplace_back(t, uq);

  std::vector<OracleCell> out;
  std::vector<size_t> idx(roots.size(), 0);
  while (true) {
    budget.charge();
    UnipotentCoords up;
    for (size_t i = 0; i < roots.size(); ++i) up.set_coord(roots[i], grids[i][idx[i]]);
    Mat4 M = mat_mul(n, unipotent_matrix(up));

    if (row_p_integral(M[2], p)) {
      for (const Rat& a1 : ugrid) {
        budget.charge();
        std::array<Rat, 4> r3;
        for (int j = 0; j < 4; ++j) r3[j] = M[3][j] - a1 * M[2][j];
        if (!row_p_integral(r3, p)) continue;
        for (const Rat& a4 : ugrid) {
          for (const Rat& a5 : ugrid) {
            budget.charge();
            std::array<Rat, 4> r1;
            for (int j = 0; j < 4; ++j) r1[j] = M[1][j] + a4 * M[2][j] + a5 * M[3][j];
            if (!row_p_integral(r1, p)) continue;
            for (const Rat& a2 : ugrid) {
              std::array<Rat, 4> r0;
              Rat a45 = a4 + a1 * a5;
              for (int j = 0; j < 4; ++j)
                r0[j] = M[0][j] + a1 * M[1][j] + a2 * M[2][j] + a45 * M[3][j];
              if (!row_p_integral(r0, p)) continue;
              OracleCell cell;
              cell.u = UnipotentCoords{a1, a2, a4, a5};
              for (size_t i = 0; i < roots.size(); ++i)
                cell.uprime[static_cast<int>(roots[i])] = grids[i][idx[i]];
              out.push_back(cell);
            }
          }
        }
      }
    }

    // Advance the mixed-radix slice index.
    size_t k = 0;
    while (k < idx.size()) {
      if (++idx[k] < grids[k].size()) break;
      idx[k] = 0;
      ++k;
    }
    if (k == idx.size() && !idx.empty()) break;
    if (idx.empty()) break;
  }
  return out;
}

std::vector<OracleCell> enumerate_X(const CellParams& c, DenominatorCap cap,
                                    Budget& budget) {
  return enumerate_X_matrix(cell_matrix(c), c, cap, budget);
}

std::vector<OracleCell> enumerate_X(const CellParams& c, DenominatorCap cap) {
  Budget budget(default_term_budget());
  return enumerate_X(c, cap, budget);
}

KloostermanValue oracle_kl_from_cells(const std::vector<OracleCell>& cells,
                                      const CellParams& c, const CharacterPair& ch) {
  CyclotomicTally tally(c.p, std::max(c.r, c.s));
  for (const OracleCell& cell : cells) tally.add_phase(cell.phase(ch, c.p));
  return KloostermanValue{tally, static_cast<i64>(cells.size()), 0};
}

KloostermanValue oracle_kl(const CellParams& c, const CharacterPair& ch) {
  return oracle_kl_from_cells(enumerate_X(c), c, ch);
}

bool certify_cap_closure(const CellParams& c, DenominatorCap base) {
  std::vector<OracleCell> a = enumerate_X(c, base);
  std::vector<OracleCell> b = enumerate_X(c, DenominatorCap{base.extra + 1});
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

namespace {

int twist_level(const CellParams& c) { return std::max({c.r, c.s, 1}) + 1; }

}  // namespace

bool check_torus_twist_left(const CellParams& c, const CharacterPair& ch,
                            const TorusUnits& t) {
  Budget budget(default_term_budget());
  Mat4 tn = mat_mul(torus_matrix(t), cell_matrix(c));
  auto lhs_cells = enumerate_X_matrix(tn, c, DenominatorCap{}, budget);
  KloostermanValue lhs = oracle_kl_from_cells(lhs_cells, c, ch);

  PrimePower pk(c.p, twist_level(c));
  auto [m1t, m2t] = twist_character(t, ch.m1, ch.m2, pk);
  KloostermanValue rhs = oracle_kl(c, CharacterPair{m1t, m2t, ch.n1, ch.n2});
  return lhs.tally.equals(rhs.tally);
}

bool check_torus_twist_right(const CellParams& c, const CharacterPair& ch,
                             const TorusUnits& t) {
  Budget budget(default_term_budget());
  Mat4 nti = mat_mul(cell_matrix(c), mat_inverse(torus_matrix(t)));
  auto lhs_cells = enumerate_X_matrix(nti, c, DenominatorCap{}, budget);
  KloostermanValue lhs = oracle_kl_from_cells(lhs_cells, c, ch);

  PrimePower pk(c.p, twist_level(c));
  auto [n1t, n2t] = twist_character(t, ch.n1, ch.n2, pk);
  KloostermanValue rhs = oracle_kl(c, CharacterPair{ch.m1, ch.m2, n1t, n2t});
  return lhs.tally.equals(rhs.tally);
}

}  // namespace klsp4

#include "klsp4/strat.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <tuple>
#include <unordered_set>

namespace klsp4 {

namespace {

// Exact scaling factors applied to the four root coordinates by conjugation
// with diag(d1, d2, c/d1, c/d2):
//   alpha: d1/d2, 2alpha+beta: d1^2/c, alpha+beta: d1*d2/c, beta: d2^2/c.
std::array<Rat, 4> conj_factors(const Rat& d1, const Rat& d2, const Rat& c) {
  return {d1 / d2, d1 * d1 / c, d1 * d2 / c, d2 * d2 / c};
}

// p-adic fractional part of a rational whose denominator is p^d times a
// unit: the unique value t/p^d in [0,1) with x - t/p^d p-integral.
Rat frac_p(const Rat& x, i64 p) {
  i64 m = x.den;
  i64 pd = 1;
  while (m % p == 0) {
    m /= p;
    pd *= p;
  }
  if (pd == 1) return Rat(0);
  i64 num = mul_mod(mod_reduce(x.num, pd), inv_mod(mod_reduce(m, pd), pd), pd);
  return Rat(num, pd);
}

// The p-integral remainder x - frac_p(x), trimmed to its residue mod p^K.
// Only the class mod p^K ever enters later products, and trimming keeps the
// numerators small enough for exact i64 rational arithmetic.
Rat int_part_p(const Rat& x, i64 p, i64 pK) {
  Rat g = x - frac_p(x, p);  // p-integral: unit denominator.
  i64 num = mul_mod(mod_reduce(g.num, pK), inv_mod(mod_reduce(g.den, pK), pK), pK);
  return Rat(num);
}

// reduce_left / reduce_right over Z_p: same elimination as the archimedean
// versions in sp4.cpp, but with p-adic fractional parts so that coordinates
// with unit denominators (from exact torus ratios) reduce correctly.
UnipotentCoords reduce_left_p(const UnipotentCoords& u, i64 p, i64 pK) {
  UnipotentCoords d;
  d.a1 = frac_p(u.a1, p);
  Rat g1 = int_part_p(u.a1, p, pK);
  d.a5 = frac_p(u.a5, p);
  Rat g5 = int_part_p(u.a5, p, pK);
  Rat x4 = u.a4 + g5 * d.a1;
  d.a4 = frac_p(x4, p);
  Rat g4 = int_part_p(x4, p, pK);
  d.a2 = frac_p(u.a2 - g1 * d.a4 + (g4 + g1 * g5) * d.a1, p);
  return d;
}

UnipotentCoords reduce_right_p(const UnipotentCoords& u, i64 p, i64 pK) {
  UnipotentCoords d;
  d.a1 = frac_p(u.a1, p);
  Rat h1 = int_part_p(u.a1, p, pK);
  d.a5 = frac_p(u.a5, p);
  Rat h5 = int_part_p(u.a5, p, pK);
  (void)h5;
  Rat x4 = u.a4 + d.a5 * h1;
  d.a4 = frac_p(x4, p);
  Rat h4 = int_part_p(x4, p, pK);
  d.a2 = frac_p(u.a2 - d.a1 * h4 + (d.a4 + d.a1 * d.a5) * h1, p);
  return d;
}

}  // namespace

OracleCell torus_act(const TorusElement& t, const OracleCell& x, const CellParams& c,
                     const PrimePower& level) {
  (void)level;  // the action on canonical representatives is exact
  const Rat d1(t.a1), d2(t.a2), cc(t.c);
  std::array<Rat, 4> fu = conj_factors(d1, d2, cc);

  // Entries of s = n^{-1} t n: the diagonal values {a1, a2, c/a1, c/a2}
  // rearranged by the cell's permutation (Weyl elements normalize the torus
  // and preserve the similitude).
  std::array<int, 4> perm = weyl_diag_permutation(c.w);
  std::array<Rat, 4> tv = {d1, d2, cc / d1, cc / d2};
  std::array<Rat, 4> fup =
      conj_factors(tv[static_cast<size_t>(perm[0])], tv[static_cast<size_t>(perm[1])], cc);

  // Trim modulus: integer parts only matter modulo the largest coordinate
  // denominator that can appear in a product (at most p^(2*max(r,s))).
  const i64 pK = checked_pow(c.p, 2 * std::max({c.r, c.s, 1}) + 1);

  // Scale the coordinates exactly, then reduce back to the canonical
  // representatives of the left (u) and right (u') cosets.
  UnipotentCoords uu;
  for (Root g : ALL_ROOTS) uu.set_coord(g, fu[static_cast<int>(g)] * x.u.coord(g));
  OracleCell out;
  out.u = reduce_left_p(uu, c.p, pK);

  UnipotentCoords up;
  for (Root g : ALL_ROOTS)
    up.set_coord(g, fup[static_cast<int>(g)] * x.uprime[static_cast<int>(g)]);
  UnipotentCoords upr = reduce_right_p(up, c.p, pK);
  for (Root g : ALL_ROOTS) out.uprime[static_cast<int>(g)] = upr.coord(g);
  return out;
}

std::array<Rat, 4> kappa(const OracleCell& x) {
  return {x.u.a1, x.u.a5, x.uprime[static_cast<int>(Root::Alpha)],
          x.uprime[static_cast<int>(Root::Beta)]};
}

const std::vector<VwElement>& enumerate_Vw(Weyl w, const PrimePower& level) {
  if (level.k < 1) throw domain_error("enumerate_Vw: level must be >= 1");
  static std::map<std::tuple<int, i64, int>, std::vector<VwElement>> cache;
  auto key = std::make_tuple(static_cast<int>(w), level.p, level.k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  bool has_a = false, has_b = false;
  for (Root g : delta_w(w)) {
    if (g == Root::Alpha) has_a = true;
    if (g == Root::Beta) has_b = true;
  }
  std::unordered_set<std::uint64_t> seen;
  std::vector<VwElement> out;
  std::vector<i64> units = unit_residues(level);
  std::array<int, 4> perm = weyl_diag_permutation(w);
  i64 q = level.q;
  std::vector<i64> inv(static_cast<size_t>(q), 0);
  for (i64 u : units) inv[static_cast<size_t>(u)] = inv_mod(u, q);
  for (i64 a1 : units)
    for (i64 a2 : units)
      for (i64 c : units) {
        i64 cinv = inv[static_cast<size_t>(c)];
        i64 l1 = mul_mod(a1, inv[static_cast<size_t>(a2)], q);
        i64 l2 = mul_mod(mul_mod(a2, a2, q), cinv, q);
        std::array<i64, 4> tv = {a1, a2, mul_mod(c, inv[static_cast<size_t>(a1)], q),
                                 mul_mod(c, inv[static_cast<size_t>(a2)], q)};
        i64 s1 = tv[static_cast<size_t>(perm[0])], s2 = tv[static_cast<size_t>(perm[1])];
        i64 lp1 = has_a ? mul_mod(s1, inv[static_cast<size_t>(s2)], q) : 0;
        i64 lp2 = has_b ? mul_mod(mul_mod(s2, s2, q), cinv, q) : 0;
        std::uint64_t key =
            ((static_cast<std::uint64_t>(l1) * static_cast<std::uint64_t>(q) +
              static_cast<std::uint64_t>(l2)) *
                 static_cast<std::uint64_t>(q) +
             static_cast<std::uint64_t>(lp1)) *
                static_cast<std::uint64_t>(q) +
            static_cast<std::uint64_t>(lp2);
        if (seen.insert(key).second) out.push_back(VwElement{l1, l2, lp1, lp2});
      }
  return cache.emplace(key, std::move(out)).first->second;
}

ThetaData theta_of(const OracleCell& x, const CharacterPair& ch, const CellParams& c) {
  std::array<Rat, 4> k = kappa(x);
  bool has_a = false, has_b = false;
  for (Root g : delta_w(c.w)) {
    if (g == Root::Alpha) has_a = true;
    if (g == Root::Beta) has_b = true;
  }
  ThetaData th;
  th.c1 = phase_from_rat(Rat(ch.m1) * k[0], c.p);
  th.c2 = phase_from_rat(Rat(ch.m2) * k[1], c.p);
  th.c3 = has_a ? phase_from_rat(Rat(ch.n1) * k[2], c.p) : PhaseFrac{};
  th.c4 = has_b ? phase_from_rat(Rat(ch.n2) * k[3], c.p) : PhaseFrac{};
  return th;
}

CyclotomicTally eval_Sw(const ThetaData& theta, Weyl w, const PrimePower& level) {
  CyclotomicTally out(level.p, level.k);
  auto lifted = [&](PhaseFrac f) {
    if (f.level > level.k) throw domain_error("eval_Sw: phase finer than level");
    return mul_mod(f.num, checked_pow(level.p, level.k - f.level), level.q);
  };
  i64 c1 = lifted(theta.c1), c2 = lifted(theta.c2), c3 = lifted(theta.c3),
      c4 = lifted(theta.c4);
  for (const VwElement& v : enumerate_Vw(w, level)) {
    i64 t = mod_reduce(mul_mod(v.l1, c1, level.q) + mul_mod(v.l2, c2, level.q) +
                           mul_mod(v.lp1, c3, level.q) + mul_mod(v.lp2, c4, level.q),
                       level.q);
    out.add_phase(PhaseFrac{t, level.k});
  }
  return out;
}

namespace {

using CellKey = std::array<std::pair<i64, i64>, 8>;

CellKey key_of(const OracleCell& x) {
  CellKey k;
  std::array<Rat, 8> coords = {x.u.a1,     x.u.a2,     x.u.a4,     x.u.a5,
                               x.uprime[0], x.uprime[1], x.uprime[2], x.uprime[3]};
  for (int i = 0; i < 8; ++i) k[static_cast<size_t>(i)] = {coords[static_cast<size_t>(i)].num, coords[static_cast<size_t>(i)].den};
  return k;
}

}  // namespace

std::vector<std::pair<OracleCell, i64>> torus_orbits(const std::vector<OracleCell>& cells,
                                                     const CellParams& c,
                                                     const PrimePower& level) {
  // Generators of the acting group: unit-group generators in each of the
  // three diagonal slots.
  std::vector<TorusElement> gens;
  for (i64 g : unit_group_generators(level)) {
    gens.push_back(TorusElement{g, 1, 1});
    gens.push_back(TorusElement{1, g, 1});
    gens.push_back(TorusElement{1, 1, g});
  }

  std::map<CellKey, const OracleCell*> pool;
  for (const OracleCell& x : cells) pool[key_of(x)] = &x;

  std::set<CellKey> visited;
  std::vector<std::pair<OracleCell, i64>> orbits;
  for (const OracleCell& x : cells) {
    CellKey k0 = key_of(x);
    if (visited.count(k0)) continue;
    // Breadth-first closure under the generators.
    std::vector<OracleCell> frontier = {x};
    std::set<CellKey> orbit = {k0};
    while (!frontier.empty()) {
      std::vector<OracleCell> next;
      for (const OracleCell& y : frontier)
        for (const TorusElement& t : gens) {
          OracleCell z = torus_act(t, y, c, level);
          CellKey kz = key_of(z);
          if (orbit.insert(kz).second) {
            if (!pool.count(kz))
              throw domain_error("torus_orbits: action left the enumerated set");
            next.push_back(z);
          }
        }
      frontier = std::move(next);
    }
    for (const CellKey& k : orbit) visited.insert(k);
    orbits.emplace_back(x, static_cast<i64>(orbit.size()));
  }
  return orbits;
}

bool stevens_identity_check(const CellParams& c, const CharacterPair& ch, int level,
                            const std::vector<std::pair<OracleCell, i64>>& orbits,
                            const CyclotomicTally& kl_tally) {
  if (level < 1) throw domain_error("stevens_identity_check: level must be >= 1");
  if (level < std::max(c.r, c.s))
    throw domain_error("stevens_identity_check: level below coordinate denominators");
  PrimePower pl(c.p, level);

  CyclotomicTally rhs(c.p, level);
  for (const auto& [rep, size] : orbits) {
    CyclotomicTally sw = eval_Sw(theta_of(rep, ch, c), c.w, pl);
    sw.scale(size);
    rhs.add(sw);
  }
  i64 phi = pl.q - pl.q / pl.p;
  CyclotomicTally normalized = rhs.exact_divide(phi * phi);
  return normalized.equals(kl_tally);
}

bool stevens_identity_check(const CellParams& c, const CharacterPair& ch, int level) {
  PrimePower pl(c.p, level);
  std::vector<OracleCell> cells = enumerate_X(c);
  return stevens_identity_check(c, ch, level, torus_orbits(cells, c, pl),
                                kl(c, ch).tally);
}

}  // namespace klsp4

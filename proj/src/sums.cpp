#include "klsp4/sums.hpp"

#include <cstdlib>
#include <set>
#include <string>

namespace klsp4 {

namespace {

i64 imod(i128 x, i64 m) {
  i64 r = static_cast<i64>(x % m);
  return r < 0 ? r + m : r;
}

// Decomposes q as p^k; throws for q that is neither 1 nor a prime power.
PrimePower as_prime_power(i64 q, i64 p_hint) {
  if (q < 1) throw domain_error("modulus must be positive");
  if (q == 1) return PrimePower(p_hint, 0);
  i64 p = q;
  for (i64 d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  int k = 0;
  i64 t = q;
  while (t % p == 0) {
    t /= p;
    ++k;
  }
  if (t != 1) throw domain_error("modulus is not a prime power");
  return PrimePower(p, k);
}

}  // namespace

i64 default_term_budget() {
  if (const char* env = std::getenv("KLSP4_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw domain_error("KLSP4_BUDGET must be a positive integer");
  }
  return 200'000'000;
}

CyclotomicTally gl2_kloosterman(i64 m, i64 n, i64 q) {
  PrimePower pk = as_prime_power(q, 2);
  CyclotomicTally out(pk.p, pk.k);
  if (pk.k == 0) {
    out.add_phase(PhaseFrac{0, 0});
    return out;
  }
  for (i64 x : unit_residues(pk)) {
    i64 t = imod(static_cast<i128>(m) * x + static_cast<i128>(n) * inv_mod(x, pk.q), pk.q);
    out.add_phase(PhaseFrac{t, pk.k});
  }
  return out;
}

CyclotomicTally ramanujan(i64 q, i64 m) {
  PrimePower pk = as_prime_power(q, 2);
  CyclotomicTally out(pk.p, pk.k);
  if (pk.k == 0) {
    out.add_phase(PhaseFrac{0, 0});
    return out;
  }
  for (i64 x : unit_residues(pk))
    out.add_phase(PhaseFrac{imod(static_cast<i128>(m) * x, pk.q), pk.k});
  return out;
}

CyclotomicTally gauss_quadratic(i64 a, const PrimePower& pk) {
  CyclotomicTally out(pk.p, pk.k);
  for (i64 x = 0; x < pk.q; ++x)
    out.add_phase(PhaseFrac{imod(static_cast<i128>(a) * x % pk.q * x, pk.q), pk.k});
  return out;
}

namespace {

struct Accum {
  CyclotomicTally tally;
  i64 terms = 0;
  i64 skipped = 0;
  i64 p;
  int r, s, lmax;
  i64 pl;  // p^lmax

  Accum(i64 p_, int r_, int s_)
      : tally(p_, std::max(r_, s_)), p(p_), r(r_), s(s_), lmax(std::max(r_, s_)) {
    pl = checked_pow(p, lmax);
  }

  // Adds e(x1/p^r + x2/p^s).
  void add(i64 x1, i64 x2) {
    i64 num = imod(static_cast<i128>(x1) * checked_pow(p, lmax - r) +
                       static_cast<i128>(x2) * checked_pow(p, lmax - s),
                   pl);
    tally.add_phase(PhaseFrac{num, lmax});
    ++terms;
  }
};

int vval(i64 x, i64 p) { return valuation(x, p); }

KloostermanValue finish(Accum& a) {
  return KloostermanValue{a.tally, a.terms, a.skipped};
}

KloostermanValue eval_id(const CellParams& c) {
  Accum a(c.p, 0, 0);
  a.add(0, 0);
  return finish(a);
}

KloostermanValue eval_a(const CellParams& c, const CharacterPair& ch, Budget& budget) {
  PrimePower pk(c.p, c.r);
  Accum a(c.p, c.r, 0);
  for (i64 x : unit_residues(pk)) {
    budget.charge();
    if (pk.k == 0) {
      a.add(0, 0);
    } else {
      a.add(imod(static_cast<i128>(ch.m1) * x + static_cast<i128>(ch.n1) * inv_mod(x, pk.q),
                 pk.q),
            0);
    }
  }
  return finish(a);
}

KloostermanValue eval_b(const CellParams& c, const CharacterPair& ch, Budget& budget) {
  PrimePower pk(c.p, c.s);
  Accum a(c.p, 0, c.s);
  for (i64 x : unit_residues(pk)) {
    budget.charge();
    if (pk.k == 0) {
      a.add(0, 0);
    } else {
      a.add(0, imod(static_cast<i128>(ch.m2) * x +
                        static_cast<i128>(ch.n2) * inv_mod(x, pk.q),
                    pk.q));
    }
  }
  return finish(a);
}

KloostermanValue eval_ab(const CellParams& c, const CharacterPair& ch, Budget& budget) {
  const i64 p = c.p;
  const int r = c.r, s = c.s;
  const i64 q1 = checked_pow(p, r - s), q2 = checked_pow(p, s), pr = checked_pow(p, r);
  Accum a(p, r, s);
  // The first phase has conductor p^(r-s); scale its numerator into p^r.
  const i64 lift1 = checked_pow(p, s);
  for (i64 v4 : unit_residues(PrimePower(p, s))) {
    for (i64 v3 = 0; v3 < pr; ++v3) {
      budget.charge();
      if (q1 > 1 && v3 % p == 0) continue;
      i64 ph1 = mul_mod(mod_reduce(ch.m1, q1), inv_mod(v3, q1), q1);
      i64 ph2 = imod(static_cast<i128>(mod_reduce(ch.m2, q2)) *
                             mul_mod(inv_mod(v4, q2), mul_mod(v3, v3, q2), q2) +
                         static_cast<i128>(ch.n2) * v4,
                     q2);
      a.add(mul_mod(ph1, lift1, pr), ph2);
    }
  }
  return finish(a);
}

KloostermanValue eval_ba(const CellParams& c, const CharacterPair& ch, Budget& budget) {
  const i64 p = c.p;
  const int r = c.r, s = c.s;
  const i64 q1 = checked_pow(p, r), q2 = checked_pow(p, s - 2 * r),
            ps = checked_pow(p, s);
  Accum a(p, r, s);
  const i64 lift2 = checked_pow(p, s - (s - 2 * r));  // p^(2r): conductor lift into p^s
  for (i64 v24 : unit_residues(PrimePower(p, r))) {
    for (i64 v34 = 0; v34 < ps; ++v34) {
      budget.charge();
      if (q2 > 1 && v34 % p == 0) continue;
      i64 ph1 = imod(static_cast<i128>(mod_reduce(ch.m1, q1)) *
                             mul_mod(inv_mod(v24, q1), mod_reduce(v34, q1), q1) +
                         static_cast<i128>(ch.n1) * v24,
                     q1);
      i64 ph2 = mul_mod(mod_reduce(ch.m2, q2), inv_mod(v34, q2), q2);
      a.add(ph1, mul_mod(ph2, lift2, ps));
    }
  }
  return finish(a);
}

KloostermanValue eval_aba(const CellParams& c, const CharacterPair& ch, Budget& budget) {
  const i64 p = c.p;
  const int r = c.r, s = c.s;
  const i64 pr = checked_pow(p, r), ps = checked_pow(p, s);
  PrimePower modr(p, r);
  Accum acc(p, r, s);
  for (int a = std::max(s - r, 0); 2 * a <= s; ++a) {
    std::vector<i64> v2p_range =
        a > 0 ? unit_residues(PrimePower(p, a)) : std::vector<i64>{1};
    const i64 pa = checked_pow(p, a);
    for (i64 v2p : v2p_range) {
      for (i64 v3 = 0; v3 < pr; ++v3) {
        for (i64 v4 = 0; v4 < pr; ++v4) {
          budget.charge();
          if (std::min({vval(v3, p), vval(v4, p), r - a}) != 0) continue;
          i64 X = pa * v3 + v2p * v4;
          if (std::min(r - a, vval(X, p)) != r + a - s) continue;
          i64 v2 = mod_reduce(checked_pow(p, r - a) * v2p, pr);
          auto vh = solve_directed_system(
              {{v3, mod_reduce(-static_cast<i64>(v2p) * checked_pow(p, s - a), pr)},
               {v4, mod_reduce(checked_pow(p, s), pr)}},
              modr);
          if (!vh) {
            ++acc.skipped;
            continue;
          }
          i64 u = 0;
          if (s > 0) {
            i64 v2pbar = inv_mod(v2p, ps);
            i64 pe1 = mod_reduce(checked_pow(p, 2 * a + r - s), ps);
            i64 pe2 = mod_reduce(checked_pow(p, a + r - s), ps);
            u = imod(-static_cast<i128>(mul_mod(mul_mod(v2pbar, v2pbar, ps), v3, ps)) * pe1 +
                         static_cast<i128>(mul_mod(v2pbar, mod_reduce(v4, ps), ps)) * pe2,
                     ps);
            if (2 * a < s) {
              // V' = (p^a v3 + v2' v4) / p^(r+a-s) is an exact unit here.
              i64 Vp = X / checked_pow(p, r + a - s);
              i64 t = mul_mod(inv_mod(mul_mod(mod_reduce(Vp, ps), v2p, ps), ps),
                              mul_mod(v3, v3, ps), ps);
              u = mod_reduce(u + mul_mod(t, mod_reduce(checked_pow(p, 2 * a), ps), ps), ps);
            }
          }
          acc.add(imod(static_cast<i128>(ch.m1) * *vh + static_cast<i128>(ch.n1) * v2, pr),
                  imod(static_cast<i128>(ch.m2) * u, ps));
        }
      }
    }
  }
  return finish(acc);
}

KloostermanValue eval_bab(const CellParams& c, const CharacterPair& ch, Budget& budget) {
  const i64 p = c.p;
  const int r = c.r, s = c.s;
  const i64 pr = checked_pow(p, r), ps = checked_pow(p, s);
  PrimePower modr(p, r), mods(p, s);
  const i64 psr = checked_pow(p, s - r);
  Accum acc(p, r, s);
  for (i64 v13 = 0; v13 < ps; ++v13) {
    const int val13 = vval(v13, p);
    for (i64 v14 = 0; v14 < ps; ++v14) {
      const int val14 = vval(v14, p);
      if (std::min({s, val13, val14}) != s - r) continue;
      // (p^s, v14) must divide v13^2.
      if (2 * std::min(val13, VAL_INF / 4) < std::min(s, val14)) continue;
      for (i64 v23 = 0; v23 < ps; ++v23) {
        budget.charge();
        i128 num = static_cast<i128>(v13) * v13 + static_cast<i128>(v14) * v23;
        if (num % ps != 0) continue;
        i64 v34 = -static_cast<i64>(num / ps);
        if (std::min({s - r, vval(v23, p), vval(v34, p)}) != 0) continue;
        auto u = solve_directed_system(
            {{v13 / psr, mod_reduce(v23, pr)}, {v14 / psr, mod_reduce(-v13, pr)}}, modr);
        if (!u) {
          ++acc.skipped;
          continue;
        }
        i64 rhs14 = mul_mod(v14 / checked_pow(p, std::max(s - 2 * r, 0)),
                            pow_mod(p, std::max(2 * r - s, 0), ps), ps);
        auto vh = solve_directed_system(
            {{mod_reduce(v23, ps), mod_reduce(-pow_mod(p, 2 * r, ps), ps)},
             {mod_reduce(v34, ps), rhs14}},
            mods);
        if (!vh) {
          ++acc.skipped;
          continue;
        }
        acc.add(imod(static_cast<i128>(ch.m1) * *u, pr),
                imod(static_cast<i128>(ch.m2) * *vh + static_cast<i128>(ch.n2) * v14, ps));
      }
    }
  }
  return finish(acc);
}

KloostermanValue eval_w0(const CellParams& c, const CharacterPair& ch, Budget& budget) {
  const i64 p = c.p;
  const int r = c.r, s = c.s;
  const i64 pr = checked_pow(p, r), ps = checked_pow(p, s);
  PrimePower modr(p, r), mods(p, s);
  Accum acc(p, r, s);
  for (i64 v2 = 0; v2 < pr; ++v2) {
    for (i64 v4 = 0; v4 < pr; ++v4) {
      for (i64 v14 = 0; v14 < ps; ++v14) {
        i128 t = static_cast<i128>(v4) * ps - static_cast<i128>(v2) * v14;
        if (t % pr != 0) continue;
        const i64 v13 = imod(t / pr, ps);
        const int val2 = vval(v2, p), val4 = vval(v4, p);
        for (i64 v3 = 0; v3 < pr; ++v3) {
          budget.charge();
          if (std::min({r, val2, vval(v3, p), val4}) != 0) continue;
          i128 t2 = static_cast<i128>(v2) * v13 - static_cast<i128>(v3) * ps;
          if (t2 % pr != 0) continue;
          const i64 v23 = imod(t2 / pr, ps);
          i128 t3 = static_cast<i128>(v3) * v14 - static_cast<i128>(v4) * v13;
          if (t3 % pr != 0) continue;
          const i64 v34 = imod(t3 / pr, ps);
          if (std::min({s, vval(v13, p), vval(v14, p), vval(v23, p), vval(v34, p)}) != 0)
            continue;
          auto vh2 = solve_directed_system({{v2, mod_reduce(ps, pr)},
                                            {v3, mod_reduce(v13, pr)},
                                            {v4, mod_reduce(v14, pr)}},
                                           modr);
          if (!vh2) {
            ++acc.skipped;
            continue;
          }
          auto vh14 = solve_directed_system(
              {{v13, imod(-static_cast<i128>(v2) * pr, ps)},
               {v14, imod(static_cast<i128>(pr) * pr, ps)},
               {v23, imod(-static_cast<i128>(v2) * v2, ps)},
               {v34, imod(static_cast<i128>(v3) * pr + static_cast<i128>(v2) * v4, ps)}},
              mods);
          if (!vh14) {
            ++acc.skipped;
            continue;
          }
          acc.add(imod(static_cast<i128>(ch.m1) * *vh2 + static_cast<i128>(ch.n1) * v2, pr),
                  imod(static_cast<i128>(ch.m2) * *vh14 + static_cast<i128>(ch.n2) * v14, ps));
        }
      }
    }
  }
  return finish(acc);
}

}  // namespace

KloostermanValue kl(const CellParams& c, const CharacterPair& ch, Budget& budget) {
  switch (c.w) {
    case Weyl::Id: return eval_id(c);
    case Weyl::A: return eval_a(c, ch, budget);
    case Weyl::B: return eval_b(c, ch, budget);
    case Weyl::AB: return eval_ab(c, ch, budget);
    case Weyl::BA: return eval_ba(c, ch, budget);
    case Weyl::ABA: return eval_aba(c, ch, budget);
    case Weyl::BAB: return eval_bab(c, ch, budget);
    case Weyl::W0: return eval_w0(c, ch, budget);
  }
  throw domain_error("kl: unknown Weyl word");
}

KloostermanValue kl(const CellParams& c, const CharacterPair& ch) {
  Budget budget(default_term_budget());
  return kl(c, ch, budget);
}

GlobalValue kl_global(const std::vector<std::pair<CellParams, CharacterPair>>& cells) {
  std::set<i64> primes;
  GlobalValue out;
  for (const auto& [c, ch] : cells) {
    if (!primes.insert(c.p).second)
      throw domain_error("kl_global: primes must be distinct");
    KloostermanValue v = kl(c, ch);
    out.magnitude *= v.tally.magnitude();
    out.locals.emplace_back(c, std::move(v));
  }
  return out;
}

}  // namespace klsp4

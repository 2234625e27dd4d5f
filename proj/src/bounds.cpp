#include "klsp4/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "klsp4/oracle.hpp"

namespace klsp4 {

std::string bound_name(BoundId id) {
  switch (id) {
    case BoundId::Trivial: return "trivial";
    case BoundId::Weil: return "weil";
    case BoundId::Ab: return "ab";
    case BoundId::Ba: return "ba";
    case BoundId::Aba: return "aba";
    case BoundId::Bab: return "bab";
    case BoundId::W0: return "w0";
  }
  return "";
}

BoundId bound_from_name(const std::string& name) {
  for (BoundId id : {BoundId::Trivial, BoundId::Weil, BoundId::Ab, BoundId::Ba,
                     BoundId::Aba, BoundId::Bab, BoundId::W0})
    if (bound_name(id) == name) return id;
  throw domain_error("unknown bound name: " + name);
}

BoundId default_bound_for(Weyl w) {
  switch (w) {
    case Weyl::Id: return BoundId::Trivial;
    case Weyl::A: return BoundId::Weil;
    case Weyl::B: return BoundId::Weil;
    case Weyl::AB: return BoundId::Ab;
    case Weyl::BA: return BoundId::Ba;
    case Weyl::ABA: return BoundId::Aba;
    case Weyl::BAB: return BoundId::Bab;
    case Weyl::W0: return BoundId::W0;
  }
  return BoundId::Trivial;
}

namespace {

// ord_p(x) saturated at cap (with ord_p(0) treated as +infinity).
int sat_ord(i64 x, i64 p, int cap) {
  if (x == 0) return cap;
  return std::min(valuation(x, p), cap);
}

double ppow(i64 p, double e) { return std::pow(static_cast<double>(p), e); }

double trivial_bound(const CellParams& c) {
  int total = std::max(c.r, c.s) * 4;  // never smaller than the term count
  for (auto [root, cap] : slice_caps(c)) {
    (void)root;
    total += cap;
  }
  return ppow(c.p, total);
}

double bound_ab(const CellParams& c, const CharacterPair& ch) {
  const i64 p = c.p;
  double left = ppow(p, 2 * c.s + sat_ord(ch.m1, p, c.r - c.s));
  double right =
      ppow(p, c.r + 0.5 * sat_ord(ch.m2, p, c.s) + 0.5 * sat_ord(ch.n2, p, c.s));
  return std::min(left, right);
}

double bound_ba(const CellParams& c, const CharacterPair& ch) {
  const i64 p = c.p;
  double left = ppow(p, 3 * c.r + sat_ord(ch.m2, p, c.s - 2 * c.r));
  double right =
      ppow(p, c.s + std::min(sat_ord(ch.m1, p, c.r), sat_ord(ch.n1, p, c.r)));
  return std::min(left, right);
}

double bound_aba(const CellParams& c, const CharacterPair& ch) {
  const i64 p = c.p;
  const int r = c.r, s = c.s;
  const int om1 = sat_ord(ch.m1, p, r), on1 = sat_ord(ch.n1, p, r),
            om2 = sat_ord(ch.m2, p, s);
  if (s <= r) {
    double e = r / 3.0 + 2.0 * s / 3.0 +
               (2.0 / 3.0) * std::min(om1 + s, on1 + r) + om2 / 3.0;
    return ppow(p, e);
  }
  if (s < 2 * r) {
    double first = ppow(p, r + std::min(om2, r + on1));
    double second = ppow(p, r + std::min(s / 2.0 + om1, r - s / 2.0 + on1));
    return first + second;
  }
  // s == 2r
  return ppow(p, r + std::min(om2, r + on1));
}

double bound_bab(const CellParams& c, const CharacterPair& ch) {
  const i64 p = c.p;
  const int r = c.r, s = c.s;
  const int om1 = sat_ord(ch.m1, p, r), om2 = sat_ord(ch.m2, p, s),
            on2 = sat_ord(ch.n2, p, s);
  if (r == s) return ppow(p, s + std::min(om1, on2));
  double tail = 0.5 * om1 + 0.5 * std::min(2 * r + om2, s + on2);
  if (2 * r <= s) return ppow(p, s / 2.0 + r / 2.0 + tail);
  return ppow(p, s - r / 2.0 + tail);  // s/2 < r < s
}

double bound_w0(const CellParams& c, const CharacterPair& ch) {
  const i64 p = c.p;
  const int r = c.r, s = c.s;
  double mside = 0.5 * (sat_ord(ch.m1, p, r) + sat_ord(ch.m2, p, s));
  double nside = 0.5 * (sat_ord(ch.n1, p, r) + sat_ord(ch.n2, p, s));
  double front = std::min(ppow(p, mside), ppow(p, nside));
  return front * (s + 1) * ppow(p, r / 2.0 + 3.0 * s / 4.0 + std::min(r, s) / 2.0);
}

}  // namespace

double weil_gl2_bound(i64 m, i64 n, const PrimePower& pk) {
  if (pk.k == 0) return 1.0;
  int g = std::min(sat_ord(m, pk.p, pk.k), sat_ord(n, pk.p, pk.k));
  return 2.0 * ppow(pk.p, pk.k / 2.0 + g / 2.0);
}

double bound_value(BoundId id, const CellParams& c, const CharacterPair& ch) {
  switch (id) {
    case BoundId::Trivial: return trivial_bound(c);
    case BoundId::Weil:
      if (c.w == Weyl::A) return weil_gl2_bound(ch.m1, ch.n1, PrimePower(c.p, c.r));
      if (c.w == Weyl::B) return weil_gl2_bound(ch.m2, ch.n2, PrimePower(c.p, c.s));
      throw domain_error("weil bound applies only to the two rank-one cells");
    case BoundId::Ab:
      if (c.w != Weyl::AB) throw domain_error("bound 'ab' applies only to cell ab");
      return bound_ab(c, ch);
    case BoundId::Ba:
      if (c.w != Weyl::BA) throw domain_error("bound 'ba' applies only to cell ba");
      return bound_ba(c, ch);
    case BoundId::Aba:
      if (c.w != Weyl::ABA) throw domain_error("bound 'aba' applies only to cell aba");
      return bound_aba(c, ch);
    case BoundId::Bab:
      if (c.w != Weyl::BAB) throw domain_error("bound 'bab' applies only to cell bab");
      return bound_bab(c, ch);
    case BoundId::W0:
      if (c.w != Weyl::W0) throw domain_error("bound 'w0' applies only to cell w0");
      return bound_w0(c, ch);
  }
  throw domain_error("unknown bound id");
}

}  // namespace klsp4

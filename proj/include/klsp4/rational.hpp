#pragma once

// Exact rational numbers with small (64-bit) numerator/denominator, used for
// matrix entries and unipotent coordinates.  Denominators arising here are
// always powers of the working prime; products are checked for overflow.

#include <numeric>

#include "klsp4/padic.hpp"

namespace klsp4 {

struct Rat {
  i64 num = 0;
  i64 den = 1;  // > 0, gcd(num, den) == 1

  constexpr Rat() = default;
  Rat(i64 n) : num(n), den(1) {}
  Rat(i64 n, i64 d) { assign(n, d); }

  void assign(i64 n, i64 d) {
    if (d == 0) throw domain_error("Rat: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i64 g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    num = n;
    den = d;
  }

  bool is_integer() const { return den == 1; }
  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
};

namespace detail {
inline i64 checked_cast(i128 v, const char* what) {
  if (v > static_cast<i128>(INT64_MAX) || v < static_cast<i128>(INT64_MIN))
    throw domain_error(std::string("Rat overflow in ") + what);
  return static_cast<i64>(v);
}
}  // namespace detail

inline Rat rat_add(const Rat& a, const Rat& b) {
  i64 g = std::gcd(a.den, b.den);
  i128 n = static_cast<i128>(a.num) * (b.den / g) + static_cast<i128>(b.num) * (a.den / g);
  i128 d = static_cast<i128>(a.den) * (b.den / g);
  return Rat(detail::checked_cast(n, "add"), detail::checked_cast(d, "add"));
}

inline Rat rat_mul(const Rat& a, const Rat& b) {
  i64 g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
  i64 g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
  i128 n = static_cast<i128>(a.num / g1) * (b.num / g2);
  i128 d = static_cast<i128>(a.den / g2) * (b.den / g1);
  return Rat(detail::checked_cast(n, "mul"), detail::checked_cast(d, "mul"));
}

inline Rat operator+(const Rat& a, const Rat& b) { return rat_add(a, b); }
inline Rat operator-(const Rat& a) { return Rat(-a.num, a.den); }
inline Rat operator-(const Rat& a, const Rat& b) { return rat_add(a, -b); }
inline Rat operator*(const Rat& a, const Rat& b) { return rat_mul(a, b); }

inline Rat rat_inv(const Rat& a) {
  if (a.num == 0) throw domain_error("rat_inv: zero");
  return Rat(a.den, a.num);
}

inline Rat rat_div(const Rat& a, const Rat& b) { return rat_mul(a, rat_inv(b)); }
inline Rat operator/(const Rat& a, const Rat& b) { return rat_div(a, b); }

// Largest integer <= x.
inline i64 rat_floor(const Rat& x) {
  i64 q = x.num / x.den;
  if (x.num % x.den != 0 && x.num < 0) --q;
  return q;
}

// p^e as a rational (e may be negative).
inline Rat rat_pow(i64 p, int e) {
  return e >= 0 ? Rat(checked_pow(p, e)) : Rat(1, checked_pow(p, -e));
}

// p-adic valuation of a rational (VAL_INF for zero).
inline int rat_val(const Rat& x, i64 p) {
  if (x.num == 0) return VAL_INF;
  return valuation(x.num, p) - valuation(x.den, p);
}

// Fractional part in [0, 1).
inline Rat rat_frac(const Rat& x) {
  i64 r = mod_reduce(x.num, x.den);
  return Rat(r, x.den);
}

}  // namespace klsp4

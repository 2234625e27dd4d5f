#include "klsp4/padic.hpp"

#include <numeric>

namespace klsp4 {

bool is_prime(i64 p) {
  if (p < 2) return false;
  for (i64 d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

i64 checked_pow(i64 p, int k) {
  if (k < 0) throw domain_error("checked_pow: negative exponent");
  i64 r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > (i64{1} << 62) / p) throw domain_error("checked_pow: modulus exceeds 2^62");
    r *= p;
  }
  return r;
}

int valuation(i64 x, i64 p) {
  if (p < 2) throw domain_error("valuation: p must be >= 2");
  if (x == 0) return VAL_INF;
  if (x < 0) x = -x;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

i64 mod_reduce(i64 x, i64 m) {
  if (m <= 0) throw domain_error("mod_reduce: modulus must be positive");
  i64 r = x % m;
  return r < 0 ? r + m : r;
}

i64 mul_mod(i64 a, i64 b, i64 m) {
  return static_cast<i64>(static_cast<i128>(mod_reduce(a, m)) * mod_reduce(b, m) % m);
}

i64 pow_mod(i64 a, i64 e, i64 m) {
  if (e < 0) throw domain_error("pow_mod: negative exponent");
  i64 r = mod_reduce(1, m);
  a = mod_reduce(a, m);
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

namespace {
// Extended Euclid: returns gcd and Bezout coefficient x with a*x = gcd (mod b0).
i64 ext_gcd(i64 a, i64 b, i64& x) {
  i64 x0 = 1, x1 = 0;
  while (b != 0) {
    i64 q = a / b;
    a -= q * b;
    std::swap(a, b);
    x0 -= q * x1;
    std::swap(x0, x1);
  }
  x = x0;
  return a;
}
}  // namespace

bool has_inverse(i64 a, i64 m) {
  if (m == 1) return true;
  return std::gcd(mod_reduce(a, m), m) == 1;
}

i64 inv_mod(i64 a, i64 m) {
  if (m <= 0) throw domain_error("inv_mod: modulus must be positive");
  if (m == 1) return 0;
  a = mod_reduce(a, m);
  i64 x;
  i64 g = ext_gcd(a, m, x);
  if (g != 1 && g != -1) throw domain_error("inv_mod: element is not invertible");
  return mod_reduce(x, m);
}

PrimePower::PrimePower(i64 p_, int k_) : p(p_), k(k_), q(0) {
  if (!is_prime(p)) throw domain_error("PrimePower: p must be prime");
  if (k < 0) throw domain_error("PrimePower: exponent must be nonnegative");
  q = checked_pow(p, k);
}

std::vector<i64> unit_residues(const PrimePower& pk) {
  if (pk.trivial()) return {0};
  std::vector<i64> out;
  out.reserve(static_cast<size_t>(pk.q - pk.q / pk.p));
  for (i64 x = 1; x < pk.q; ++x)
    if (x % pk.p != 0) out.push_back(x);
  return out;
}

std::vector<i64> unit_group_generators(const PrimePower& pk) {
  if (pk.trivial() || pk.q == 2) return {};
  if (pk.p == 2) {
    if (pk.k == 2) return {3};
    return {pk.q - 1, 5};
  }
  // Find a primitive root mod p, then lift: a generator of (Z/p)^x that is
  // not a (p-1)-th power killer mod p^2 generates (Z/p^k)^x.
  i64 p = pk.p;
  i64 phi = p - 1;
  std::vector<i64> primes;
  {
    i64 t = phi;
    for (i64 d = 2; d * d <= t; ++d)
      if (t % d == 0) {
        primes.push_back(d);
        while (t % d == 0) t /= d;
      }
    if (t > 1) primes.push_back(t);
  }
  i64 g = 0;
  for (i64 cand = 2; cand < p; ++cand) {
    bool ok = true;
    for (i64 qf : primes)
      if (pow_mod(cand, phi / qf, p) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      g = cand;
      break;
    }
  }
  if (pk.k == 1) return {g};
  if (pow_mod(g, phi, p * p) == 1) g += p;
  return {mod_reduce(g, pk.q)};
}

std::optional<LinearSolution> solve_scaled_linear(i64 a, i64 b, const PrimePower& pk) {
  i64 q = pk.q;
  a = mod_reduce(a, q);
  b = mod_reduce(b, q);
  if (pk.trivial()) return LinearSolution{0, 1};
  if (a == 0) {
    if (b != 0) return std::nullopt;
    return LinearSolution{0, 1};
  }
  int v = valuation(a, pk.p);
  i64 pv = checked_pow(pk.p, v);
  if (b % pv != 0) return std::nullopt;
  i64 period = q / pv;  // p^(k-v)
  i64 x0 = mul_mod(b / pv, inv_mod(a / pv, period), period);
  return LinearSolution{x0, period};
}

std::optional<LinearSolution> solve_directed_progression(
    const std::vector<std::pair<i64, i64>>& eqs, const PrimePower& pk) {
  LinearSolution acc{0, 1};
  for (const auto& [a, b] : eqs) {
    auto sol = solve_scaled_linear(a, b, pk);
    if (!sol) return std::nullopt;
    // Intersect two arithmetic progressions with p-power periods: the finer
    // one refines the coarser, provided the base points are compatible.
    const LinearSolution& fine = sol->period >= acc.period ? *sol : acc;
    const LinearSolution& coarse = sol->period >= acc.period ? acc : *sol;
    if (mod_reduce(fine.base - coarse.base, coarse.period) != 0) return std::nullopt;
    acc = fine;
  }
  return acc;
}

std::optional<i64> solve_directed_system(const std::vector<std::pair<i64, i64>>& eqs,
                                         const PrimePower& pk) {
  auto sol = solve_directed_progression(eqs, pk);
  if (!sol) return std::nullopt;
  return sol->base;
}

}  // namespace klsp4

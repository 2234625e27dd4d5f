#include "klsp4/tally.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace klsp4 {

PhaseFrac phase_from_rat(const Rat& x, i64 p) {
  Rat f = rat_frac(x);
  int level = 0;
  i64 den = f.den;
  while (den > 1) {
    if (den % p != 0) throw domain_error("phase_from_rat: denominator is not a power of p");
    den /= p;
    ++level;
  }
  return PhaseFrac{f.num, level};
}

CyclotomicTally::CyclotomicTally(i64 p, int level) : p_(p), level_(level) {
  if (!is_prime(p)) throw domain_error("CyclotomicTally: p must be prime");
  if (level < 0) throw domain_error("CyclotomicTally: negative level");
  counts_.assign(static_cast<size_t>(checked_pow(p, level)), 0);
}

CyclotomicTally CyclotomicTally::integer(i64 p, i64 value) {
  CyclotomicTally t(p, 0);
  t.counts_[0] = value;
  return t;
}

void CyclotomicTally::lift_to(int new_level) {
  if (new_level < level_) throw domain_error("lift_to: cannot lower level");
  if (new_level == level_) return;
  i64 stretch = checked_pow(p_, new_level - level_);
  std::vector<i64> lifted(static_cast<size_t>(checked_pow(p_, new_level)), 0);
  for (size_t t = 0; t < counts_.size(); ++t)
    lifted[t * static_cast<size_t>(stretch)] = counts_[t];
  counts_ = std::move(lifted);
  level_ = new_level;
}

void CyclotomicTally::add_phase(PhaseFrac phase, i64 weight) {
  if (phase.level > level_) lift_to(phase.level);
  i64 stretch = checked_pow(p_, level_ - phase.level);
  counts_[static_cast<size_t>(phase.num * stretch)] += weight;
}

void CyclotomicTally::add(const CyclotomicTally& other) {
  if (p_ != other.p_) throw domain_error("tally add: prime mismatch");
  if (other.level_ > level_) lift_to(other.level_);
  i64 stretch = checked_pow(p_, level_ - other.level_);
  for (size_t t = 0; t < other.counts_.size(); ++t)
    counts_[t * static_cast<size_t>(stretch)] += other.counts_[t];
}

void CyclotomicTally::negate() {
  for (i64& c : counts_) c = -c;
}

void CyclotomicTally::scale(i64 factor) {
  for (i64& c : counts_) c *= factor;
}

CyclotomicTally CyclotomicTally::canonical() const {
  CyclotomicTally out = *this;
  while (true) {
    if (out.level_ > 0) {
      // Each orbit {t + j*p^(L-1) : 0 <= j < p} sums to zero, so counts are
      // determined modulo adding a constant per orbit.  Zeroing the last slot
      // (j = p-1) picks a unique representative, and this choice commutes
      // with lifting the level, so equal values always normalize identically.
      i64 stride = checked_pow(out.p_, out.level_ - 1);
      for (i64 t = 0; t < stride; ++t) {
        i64 top = out.counts_[static_cast<size_t>(t + (out.p_ - 1) * stride)];
        if (top != 0)
          for (i64 j = 0; j < out.p_; ++j)
            out.counts_[static_cast<size_t>(t + j * stride)] -= top;
      }
    }
    // Lower the level while the support sits on multiples of p.
    if (out.level_ == 0) break;
    bool reducible = true;
    for (size_t t = 0; t < out.counts_.size(); ++t)
      if (out.counts_[t] != 0 && t % static_cast<size_t>(out.p_) != 0) {
        reducible = false;
        break;
      }
    if (!reducible) break;
    std::vector<i64> lowered(out.counts_.size() / static_cast<size_t>(out.p_));
    for (size_t t = 0; t < lowered.size(); ++t)
      lowered[t] = out.counts_[t * static_cast<size_t>(out.p_)];
    out.counts_ = std::move(lowered);
    --out.level_;
  }
  return out;
}

bool CyclotomicTally::equals(const CyclotomicTally& other) const {
  CyclotomicTally a = canonical();
  CyclotomicTally b = other.canonical();
  if (p_ != other.p_) {
    // Distinct cyclotomic towers intersect only in the integers.
    if (a.level_ == 0 && b.level_ == 0) return a.counts_[0] == b.counts_[0];
    throw domain_error("tally equals: prime mismatch");
  }
  return a.level_ == b.level_ && a.counts_ == b.counts_;
}

bool CyclotomicTally::is_zero() const {
  CyclotomicTally c = canonical();
  for (i64 v : c.counts_)
    if (v != 0) return false;
  return true;
}

CyclotomicTally CyclotomicTally::exact_divide(i64 d) const {
  if (d == 0) throw domain_error("exact_divide: zero divisor");
  CyclotomicTally c = canonical();
  for (i64& v : c.counts_) {
    if (v % d != 0) throw domain_error("exact_divide: counts not divisible");
    v /= d;
  }
  return c;
}

double CyclotomicTally::magnitude() const {
  CyclotomicTally c = canonical();
  double re = 0.0, im = 0.0;
  double q = static_cast<double>(checked_pow(c.p_, c.level_));
  for (size_t t = 0; t < c.counts_.size(); ++t) {
    if (c.counts_[t] == 0) continue;
    double ang = 2.0 * std::numbers::pi * static_cast<double>(t) / q;
    re += static_cast<double>(c.counts_[t]) * std::cos(ang);
    im += static_cast<double>(c.counts_[t]) * std::sin(ang);
  }
  return std::hypot(re, im);
}

CyclotomicTally tally_product(const CyclotomicTally& a, const CyclotomicTally& b) {
  if (a.prime() != b.prime()) throw domain_error("tally_product: prime mismatch");
  CyclotomicTally x = a.canonical(), y = b.canonical();
  int level = std::max(x.level(), y.level());
  x.lift_to(level);
  y.lift_to(level);
  i64 q = checked_pow(x.prime(), level);
  CyclotomicTally out(x.prime(), level);
  for (i64 s = 0; s < q; ++s) {
    if (x.counts()[static_cast<size_t>(s)] == 0) continue;
    for (i64 t = 0; t < q; ++t) {
      if (y.counts()[static_cast<size_t>(t)] == 0) continue;
      out.add_phase(PhaseFrac{(s + t) % q, level},
                    x.counts()[static_cast<size_t>(s)] * y.counts()[static_cast<size_t>(t)]);
    }
  }
  return out;
}

std::uint64_t CyclotomicTally::digest() const {
  CyclotomicTally c = canonical();
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a offset basis
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xffull;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(c.p_));
  mix(static_cast<std::uint64_t>(c.level_));
  for (i64 v : c.counts_) mix(static_cast<std::uint64_t>(v));
  return h;
}

}  // namespace klsp4

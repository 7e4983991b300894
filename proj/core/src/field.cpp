#include "factlab/field.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "factlab/errors.hpp"

namespace factlab {
namespace {

u64 mulmod_slow(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod_slow(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod_slow(result, base, m);
    base = mulmod_slow(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 isqrt(u64 n) {
  auto r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

bool is_prime_u64(u64 n) noexcept {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kBases = {2,  3,  5,  7,  11, 13,
                                                 17, 19, 23, 29, 31, 37};
  for (u64 q : kBases) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // The first twelve primes form a witness set valid for all n < 3.3e24.
  for (u64 a : kBases) {
    u64 x = powmod_slow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_slow(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
  std::vector<u64> out;
  if (hi < 2 || lo > hi) return out;
  lo = std::max<u64>(lo, 2);

  const u64 root = isqrt(hi);
  std::vector<char> small(root + 1, 1);
  std::vector<u64> base;
  for (u64 i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (u64 j = i * i; j <= root; j += i) small[j] = 0;
  }

  constexpr u64 kSegment = u64{1} << 18;
  std::vector<char> seg;
  for (u64 start = lo; start <= hi; start += kSegment) {
    const u64 stop = std::min(hi, start + kSegment - 1);
    seg.assign(stop - start + 1, 1);
    for (u64 q : base) {
      u64 first = std::max(q * q, (start + q - 1) / q * q);
      for (u64 j = first; j <= stop; j += q) seg[j - start] = 0;
    }
    for (u64 i = start; i <= stop; ++i) {
      if (seg[i - start]) out.push_back(i);
    }
    if (stop == hi) break;
  }
  return out;
}

FieldCtx::FieldCtx(u64 p) : p_(p) {
  if (p < 3 || p % 2 == 0 || p >= (u64{1} << 63) || !is_prime_u64(p)) {
    throw RangeError("modulus " + std::to_string(p) +
                     " is not an odd prime below 2^63");
  }
  // Newton iteration for p^{-1} mod 2^64; p*p == 1 mod 8 seeds 3 bits.
  u64 inv = p;
  for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
  neg_inv_ = ~inv + 1;
  r1_ = static_cast<u64>((static_cast<u128>(1) << 64) % p);
  r2_ = mulmod_slow(r1_, r1_, p);
}

u64 FieldCtx::pow(u64 base, u64 exp) const noexcept {
  u64 result = r1_;
  u64 b = to_mont(base);
  while (exp != 0) {
    if (exp & 1) result = mont_mul(result, b);
    b = mont_mul(b, b);
    exp >>= 1;
  }
  return from_mont(result);
}

u64 FieldCtx::inv(u64 a) const {
  a %= p_;
  if (a == 0) throw DomainError("zero has no multiplicative inverse");
  // Extended Euclid on signed 128-bit to stay clear of overflow near 2^63.
  i128 r0 = p_, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const i128 q = r0 / r1;
    const i128 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    const i128 t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t0 < 0) t0 += p_;
  return static_cast<u64>(t0);
}

Residue mod_inverse(const FieldCtx& ctx, Residue a) {
  if (a.value >= ctx.modulus()) {
    throw RangeError("residue " + std::to_string(a.value) +
                     " is not reduced modulo " +
                     std::to_string(ctx.modulus()));
  }
  return Residue{ctx.inv(a.value)};
}

}  // namespace factlab

#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace factlab {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

/// A canonical residue in [0, p) of some FieldCtx.
struct Residue {
  u64 value = 0;

  friend constexpr auto operator<=>(const Residue&, const Residue&) = default;
};

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(u64 n) noexcept;

/// All primes in [lo, hi], ascending (segmented sieve).
std::vector<u64> primes_in_range(u64 lo, u64 hi);

/// Arithmetic modulo an odd prime p < 2^63.
///
/// Canonical operations take and return values in [0, p). The mont_* family
/// works on Montgomery representatives (x * 2^64 mod p) and is meant for
/// inner loops; to_mont/from_mont convert between the two.
class FieldCtx {
 public:
  /// Throws RangeError unless p is an odd prime below 2^63.
  explicit FieldCtx(u64 p);

  u64 modulus() const noexcept { return p_; }

  u64 reduce(u64 v) const noexcept { return v % p_; }
  Residue residue(u64 v) const noexcept { return Residue{v % p_}; }

  u64 add(u64 a, u64 b) const noexcept {
    const u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  u64 neg(u64 a) const noexcept { return a == 0 ? 0 : p_ - a; }
  u64 mul(u64 a, u64 b) const noexcept {
    return mont_mul(mont_mul(a, b), r2_);
  }
  u64 pow(u64 base, u64 exp) const noexcept;

  /// Throws DomainError for a == 0.
  u64 inv(u64 a) const;

  u64 to_mont(u64 a) const noexcept { return mont_mul(a, r2_); }
  u64 from_mont(u64 a) const noexcept { return mont_mul(a, 1); }
  u64 mont_one() const noexcept { return r1_; }
  /// -p^{-1} mod 2^64, for kernels that inline their own reduction.
  u64 mont_neg_inv() const noexcept { return neg_inv_; }
  u64 mont_add(u64 a, u64 b) const noexcept { return add(a, b); }

  u64 mont_mul(u64 a, u64 b) const noexcept {
    const u128 t = static_cast<u128>(a) * b;
    const u64 m = static_cast<u64>(t) * neg_inv_;
    const u128 u = t + static_cast<u128>(m) * p_;
    u64 r = static_cast<u64>(u >> 64);
    return r >= p_ ? r - p_ : r;
  }

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) noexcept {
    return a.p_ == b.p_;
  }

 private:
  u64 p_;
  u64 neg_inv_;  // -p^{-1} mod 2^64
  u64 r1_;       // 2^64 mod p
  u64 r2_;       // 2^128 mod p
};

/// a^{-1} mod p. Throws DomainError when a == 0.
Residue mod_inverse(const FieldCtx& ctx, Residue a);

}  // namespace factlab

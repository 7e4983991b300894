#include <gtest/gtest.h>

#include <random>

#include "factlab/errors.hpp"
#include "factlab/field.hpp"
#include "oracles.hpp"

using namespace factlab;

TEST(Primality, AgreesWithTrialDivisionBelow20000) {
  for (u64 n = 0; n < 20000; ++n) ASSERT_EQ(is_prime_u64(n), oracle::is_prime(n)) << n;
}

TEST(Primality, KnownLargeValues) {
  EXPECT_TRUE(is_prime_u64(9223372036854775783ull));  // largest prime < 2^63
  EXPECT_TRUE(is_prime_u64(18446744073709551557ull));  // largest prime < 2^64
  EXPECT_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to 2,3,5,7
  EXPECT_FALSE(is_prime_u64(3825123056546413051ull));
  EXPECT_FALSE(is_prime_u64(u64{4294967291} * 4294967279ull));
}

TEST(Primality, SegmentedSieveMatchesOracle) {
  EXPECT_EQ(primes_in_range(0, 3000), oracle::primes_between(0, 3000));
  EXPECT_EQ(primes_in_range(999000, 1001000), oracle::primes_between(999000, 1001000));
  EXPECT_EQ(primes_in_range(1000, 999).size(), 0u);
  EXPECT_EQ(primes_in_range(0, 1000000).size(), 78498u);
}

TEST(FieldCtx, RejectsBadModuli) {
  EXPECT_THROW(FieldCtx(2), RangeError);
  EXPECT_THROW(FieldCtx(9), RangeError);
  EXPECT_THROW(FieldCtx(0), RangeError);
  EXPECT_THROW(FieldCtx(18446744073709551557ull), RangeError);
  EXPECT_NO_THROW(FieldCtx(9223372036854775783ull));
}

TEST(FieldCtx, MulMatchesWideOracle) {
  std::mt19937_64 rng(7);
  for (u64 p : {3ull, 7ull, 10007ull, 1000000007ull, 4611686018427387847ull,
                9223372036854775783ull}) {
    const FieldCtx ctx(p);
    for (int i = 0; i < 2000; ++i) {
      const u64 a = rng() % p, b = rng() % p;
      ASSERT_EQ(ctx.mul(a, b), oracle::mulmod(a, b, p));
      ASSERT_EQ(ctx.from_mont(ctx.mont_mul(ctx.to_mont(a), ctx.to_mont(b))),
                oracle::mulmod(a, b, p));
      ASSERT_EQ(ctx.add(a, b), static_cast<u64>((static_cast<u128>(a) + b) % p));
      ASSERT_EQ(ctx.add(ctx.sub(a, b), b), a);
      ASSERT_EQ(ctx.add(a, ctx.neg(a)), 0u);
    }
    EXPECT_EQ(ctx.pow(2, p - 1), 1u);
    EXPECT_EQ(ctx.from_mont(ctx.mont_one()), 1u);
  }
}

TEST(ModInverse, Examples) {
  const FieldCtx ctx(7);
  EXPECT_EQ(mod_inverse(ctx, Residue{4}).value, 2u);
  EXPECT_EQ(mod_inverse(ctx, Residue{1}).value, 1u);
  EXPECT_THROW(mod_inverse(ctx, Residue{0}), DomainError);
  EXPECT_THROW(mod_inverse(ctx, Residue{7}), RangeError);
}

TEST(ModInverse, RoundTripExhaustiveBelow1000) {
  for (u64 p : oracle::primes_between(3, 1000)) {
    const FieldCtx ctx(p);
    for (u64 a = 1; a < p; ++a) {
      const Residue inv = mod_inverse(ctx, Residue{a});
      ASSERT_EQ(oracle::mulmod(a, inv.value, p), 1u);
      ASSERT_EQ(mod_inverse(ctx, inv).value, a);
    }
  }
}

TEST(ModInverse, NearTopOfRange) {
  const FieldCtx ctx(9223372036854775783ull);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const u64 a = rng() % (ctx.modulus() - 1) + 1;
    EXPECT_EQ(ctx.mul(a, ctx.inv(a)), 1u);
  }
}

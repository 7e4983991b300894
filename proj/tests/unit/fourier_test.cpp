#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "factlab/constructions.hpp"
#include "factlab/errors.hpp"
#include "factlab/fourier.hpp"
#include "oracles.hpp"

using namespace factlab;

TEST(Spectrum, FullAndSingleton) {
  const u64 p = 101;
  const FieldCtx ctx(p);
  const SpectrumReport full = spectrum(ctx, Progression::full(p));
  EXPECT_NEAR(full.magnitudes[0], 101.0, 1e-9);
  for (u64 r = 1; r < p; ++r) EXPECT_NEAR(full.magnitudes[r], 0.0, 1e-9);
  EXPECT_NEAR(full.l1, 101.0, 1e-9);

  const SpectrumReport one = spectrum(ctx, Progression{17, 5, 1});
  for (double m : one.magnitudes) EXPECT_NEAR(m, 1.0, 1e-12);
  EXPECT_NEAR(one.l1, 101.0, 1e-9);
}

TEST(Spectrum, MatchesNaiveTransform) {
  std::mt19937_64 rng(1);
  for (u64 p : {101ull, 1009ull}) {
    const FieldCtx ctx(p);
    for (int t = 0; t < 8; ++t) {
      const Progression I = t == 0 ? Progression::interval(0, 49)
                                   : Progression{rng() % p, rng() % (p - 1) + 1, rng() % p + 1};
      const auto naive = oracle::dft(oracle::progression(I.start, I.step, I.length, p), p);
      const SpectrumReport s = spectrum(ctx, I);
      const auto cs = complex_spectrum(ctx, I);
      double l1 = 0;
      for (u64 r = 0; r < p; ++r) {
        l1 += std::abs(naive[r]);
        ASSERT_NEAR(s.magnitudes[r], std::abs(naive[r]), 1e-8);
        ASSERT_NEAR(cs[r].real(), naive[r].real(), 1e-8);
        ASSERT_NEAR(cs[r].imag(), naive[r].imag(), 1e-8);
      }
      EXPECT_NEAR(s.l1, l1, 1e-6 * l1);
      EXPECT_NEAR(s.magnitudes[0], static_cast<double>(I.length), 1e-9);
      EXPECT_GE(s.l1, static_cast<double>(I.length) - 1e-9);
    }
  }
}

TEST(Spectrum, Parseval) {
  std::mt19937_64 rng(2);
  for (u64 p : {101ull, 1009ull, 10007ull}) {
    const FieldCtx ctx(p);
    for (int t = 0; t < 50; ++t) {
      const Progression I{rng() % p, rng() % (p - 1) + 1, rng() % p + 1};
      const SpectrumReport s = spectrum(ctx, I);
      double energy = 0;
      for (double m : s.magnitudes) energy += m * m;
      const double want = static_cast<double>(p) * I.length;
      ASSERT_NEAR(energy, want, 1e-4 * want);
    }
  }
}

TEST(Spectrum, L1GrowsLikePLogP) {
  // Exhaustive over step and length at p = 101 (start only changes phases).
  {
    const u64 p = 101;
    const FieldCtx ctx(p);
    const double cap = 4.0 * p * std::log(static_cast<double>(p));
    for (u64 step = 1; step < p; ++step)
      for (u64 len = 2; len < p; ++len)
        ASSERT_LE(spectrum(ctx, Progression{0, step, len}).l1, cap);
  }
  std::mt19937_64 rng(4);
  for (u64 p : {1009ull, 10007ull}) {
    const FieldCtx ctx(p);
    const double cap = 4.0 * p * std::log(static_cast<double>(p));
    for (int t = 0; t < 200; ++t) {
      const Progression I{rng() % p, rng() % (p - 1) + 1, rng() % (p - 2) + 2};
      ASSERT_LE(spectrum(ctx, I).l1, cap);
    }
  }
}

TEST(Inversion, RecoversIndicatorEverywhere) {
  const u64 p = 101;
  const FieldCtx ctx(p);
  std::mt19937_64 rng(6);
  for (int t = 0; t < 5; ++t) {
    const Progression I{rng() % p, rng() % (p - 1) + 1, rng() % p + 1};
    const auto cs = complex_spectrum(ctx, I);
    for (u64 x = 0; x < p; ++x) {
      ASSERT_TRUE(inversion_check(ctx, I, Residue{x}));
      const double want = contains(ctx, I, x) ? 1.0 : 0.0;
      ASSERT_NEAR(reconstruct_indicator(ctx, cs, x).real(), want, 1e-9);
    }
  }
}

TEST(FourierBound, Examples) {
  const FieldCtx ctx(1009);
  const Poly P3 = falling_product_poly(ctx, 3), P5 = falling_product_poly(ctx, 5);
  EXPECT_TRUE(fourier_error_bound(ctx, P3, P3, Progression::interval(0, 99)).satisfied);
  const CountReport full = fourier_error_bound(ctx, P3, P5, Progression::full(1009));
  EXPECT_EQ(full.observed, full.reference);
  EXPECT_TRUE(full.satisfied);
  EXPECT_TRUE(fourier_error_bound(ctx, P3, P5, Progression{0, 3, 200}).satisfied);
  const Poly P2 = falling_product_poly(ctx, 2);
  EXPECT_THROW(fourier_error_bound(ctx, P2, P2, Progression::full(1009)), PreconditionError);
}

TEST(FourierBound, ExpansionIdentityIsExact) {
  // J_I = p^-2 sum_{r,s} I^(r) I^(s) S(r, s), S the exponential sum over the
  // zero set; checks the sign convention shared by both transforms.
  const u64 p = 31;
  const FieldCtx ctx(p);
  const Poly P3 = falling_product_poly(ctx, 3), P5 = falling_product_poly(ctx, 5);
  const Progression I{4, 3, 12};
  const auto cs = complex_spectrum(ctx, I);
  for (auto [P, Q] : {std::pair{P3, P5}, std::pair{P3, P3}}) {
    std::complex<double> total{};
    for (u64 r = 0; r < p; ++r)
      for (u64 s = 0; s < p; ++s)
        total += cs[r] * cs[s] * zero_set_exp_sum(ctx, P, Q, Residue{r}, Residue{s});
    total /= static_cast<double>(p * p);
    EXPECT_NEAR(total.real(), static_cast<double>(count_interval(ctx, P, Q, I)), 1e-8);
    EXPECT_NEAR(total.imag(), 0.0, 1e-8);
  }
}

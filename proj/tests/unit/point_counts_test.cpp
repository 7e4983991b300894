#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <set>

#include "factlab/constructions.hpp"
#include "factlab/errors.hpp"
#include "factlab/point_counts.hpp"
#include "oracles.hpp"

using namespace factlab;

namespace {

u64 brute_J(const FieldCtx& ctx, const Poly& P, const Poly& Q,
            const std::vector<u64>& xs) {
  return oracle::zero_count(phi_pair(ctx, P, Q), xs, xs, ctx.modulus());
}

}  // namespace

TEST(CountFull, LineHasPPoints) {
  for (u64 p : {7ull, 101ull, 1009ull}) {
    const FieldCtx ctx(p);
    const Poly P2 = falling_product_poly(ctx, 2);
    EXPECT_EQ(count_full(ctx, P2, P2), p);
  }
}

TEST(CountFull, HistogramMatchesBruteForce) {
  for (u64 p : {11ull, 53ull, 101ull, 211ull}) {
    const FieldCtx ctx(p);
    const auto xs = oracle::all_residues(p);
    for (int k = 1; k <= 7; ++k)
      for (int j = 1; j <= 7; ++j) {
        const Poly P = falling_product_poly(ctx, k), Q = falling_product_poly(ctx, j);
        if (k == j && k == 1) continue;  // phi(P1, P1) is the constant 1
        ASSERT_EQ(count_full(ctx, P, Q), brute_J(ctx, P, Q, xs))
            << "p=" << p << " k=" << k << " j=" << j;
      }
  }
}

TEST(CountFull, ArbitraryPolynomials) {
  const u64 p = 61;
  const FieldCtx ctx(p);
  std::mt19937_64 rng(5);
  const auto xs = oracle::all_residues(p);
  for (int t = 0; t < 20; ++t) {
    std::vector<u64> a(t % 4 + 2), b(t % 3 + 2);
    for (auto& v : a) v = rng() % p;
    for (auto& v : b) v = rng() % p;
    a.back() = a.back() ? a.back() : 1;
    b.back() = b.back() ? b.back() : 1;
    const Poly P(a), Q(b);
    ASSERT_EQ(count_full(ctx, P, Q), brute_J(ctx, P, Q, xs));
    ASSERT_EQ(count_full(ctx, P, P), brute_J(ctx, P, P, xs));
  }
}

TEST(CountInterval, Examples) {
  const u64 p = 101;
  const FieldCtx ctx(p);
  const Poly P3 = falling_product_poly(ctx, 3), P5 = falling_product_poly(ctx, 5);
  EXPECT_EQ(count_interval(ctx, P3, P5, Progression::full(p)), count_full(ctx, P3, P5));
  EXPECT_EQ(count_interval(ctx, P3, P3, Progression::full(p)), count_full(ctx, P3, P3));
  const auto I = oracle::progression(0, 1, 50, p);
  EXPECT_EQ(count_interval(ctx, P3, P3, Progression::interval(0, 49)), brute_J(ctx, P3, P3, I));

  // Single point: counts 1 exactly when P'(x0) == 0.
  const Poly dP = P3.derivative(ctx);
  for (u64 x0 = 0; x0 < p; ++x0) {
    const u64 want = dP.eval(ctx, x0) == 0 ? 1 : 0;
    ASSERT_EQ(count_interval(ctx, P3, P3, Progression{x0, 1, 1}), want);
  }
}

TEST(CountInterval, ProgressionsMatchBruteForce) {
  const u64 p = 211;
  const FieldCtx ctx(p);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    const Progression I{rng() % p, rng() % (p - 1) + 1, rng() % p + 1};
    const auto xs = oracle::progression(I.start, I.step, I.length, p);
    const int k = static_cast<int>(rng() % 6) + 2, j = static_cast<int>(rng() % 6) + 2;
    const Poly P = falling_product_poly(ctx, k), Q = falling_product_poly(ctx, j);
    ASSERT_EQ(count_interval(ctx, P, Q, I), brute_J(ctx, P, Q, xs));
    ASSERT_EQ(count_interval(ctx, P, P, I), brute_J(ctx, P, P, xs));
  }
}

TEST(Images, Examples) {
  const u64 p = 101;
  const FieldCtx ctx(p);
  const Poly P1 = falling_product_poly(ctx, 1), P2 = falling_product_poly(ctx, 2),
             P3 = falling_product_poly(ctx, 3), P5 = falling_product_poly(ctx, 5);
  const Progression I = Progression::interval(0, 49);
  EXPECT_EQ(image_count(ctx, P1, I), 50u);
  EXPECT_EQ(image_count(ctx, P2, Progression::full(p)), (p + 1) / 2);
  const auto xs = oracle::progression(0, 1, 50, p);
  EXPECT_EQ(image_count(ctx, P3, I), oracle::image_size(oracle::falling_coeffs(3, p), xs, p));

  std::set<u64> a, b, both;
  for (u64 x : xs) a.insert(P3.eval(ctx, x)), b.insert(P5.eval(ctx, x));
  for (u64 v : a) if (b.count(v)) both.insert(v);
  EXPECT_EQ(intersection_count(ctx, P3, P5, I), both.size());
  EXPECT_EQ(intersection_count(ctx, P3, P3, I), image_count(ctx, P3, I));

  // x and x + 50 on {0, ..., 49}: images {0..49} and {50..99}.
  EXPECT_EQ(intersection_count(ctx, Poly({0, 1}), Poly({50, 1}), I), 0u);
}

TEST(Images, CauchySchwarzAndDomination) {
  const u64 p = 1009;
  const FieldCtx ctx(p);
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    const Progression I{rng() % p, rng() % (p - 1) + 1, rng() % (p - 1) + 2};
    for (int k : {3, 5, 7})
      for (int j : {3, 5, 7}) {
        const Poly P = falling_product_poly(ctx, k), Q = falling_product_poly(ctx, j);
        if (k == j) {
          const u128 img = image_count(ctx, P, I);
          const u128 JI = count_interval(ctx, P, P, I);
          ASSERT_GE(img * (I.length + JI), static_cast<u128>(I.length) * I.length);
        } else {
          ASSERT_LE(intersection_count(ctx, P, Q, I), count_interval(ctx, P, Q, I));
        }
      }
  }
}

TEST(LangWeil, Examples) {
  const FieldCtx ctx(1009);
  const Poly P2 = falling_product_poly(ctx, 2), P3 = falling_product_poly(ctx, 3),
             P5 = falling_product_poly(ctx, 5);
  const CountReport a = langweil_report(ctx, P3, P3);
  EXPECT_TRUE(a.satisfied);
  EXPECT_EQ(a.degree, 2);
  EXPECT_EQ(a.reference, 1009.0);
  EXPECT_NEAR(a.bound, 1.0, 1e-12);  // (d-1)(d-2) sqrt(p) + d - 1 with d = 2
  const CountReport b = langweil_report(ctx, P3, P5);
  EXPECT_TRUE(b.satisfied);
  EXPECT_EQ(b.degree, 5);
  EXPECT_NEAR(b.bound, 12.0 * std::sqrt(1009.0) + 4.0, 1e-9);
  const CountReport c = langweil_report(ctx, P2, P2);
  EXPECT_EQ(c.observed, 1009.0);
  EXPECT_TRUE(c.satisfied);
}

TEST(LangWeil, FlagsCurvesThatSplitOverTheClosure) {
  const FieldCtx ctx(101);
  // phi(x^2, x^2) = x + y, a line.
  const CountReport r = langweil_report(ctx, Poly({0, 0, 1}), Poly({0, 0, 1}));
  EXPECT_TRUE(r.satisfied);
  // x^2 - 2y^2 splits into two conjugate lines over F_{p^2}.
  const CountReport s = langweil_report(ctx, Poly({0, 0, 1}), Poly({0, 0, 2}));
  EXPECT_EQ(s.degree, 2);
  EXPECT_EQ(s.observed, 1.0);  // x^2 = 2 y^2, 2 a non-residue mod 101
  EXPECT_FALSE(s.satisfied);
}

TEST(ExpSum, MatchesDirectSummation) {
  const u64 p = 101;
  const FieldCtx ctx(p);
  const Poly P3 = falling_product_poly(ctx, 3), P5 = falling_product_poly(ctx, 5);
  for (auto [P, Q] : {std::pair{P3, P3}, std::pair{P3, P5}}) {
    const BivarPoly phi = phi_pair(ctx, P, Q);
    for (auto [b1, b2] : {std::pair{1ull, 0ull}, {0ull, 1ull}, {3ull, 7ull}}) {
      std::complex<double> want{};
      for (u64 x = 0; x < p; ++x)
        for (u64 y = 0; y < p; ++y)
          if (oracle::eval(phi, x, y, p) == 0)
            want += std::polar(1.0, 2 * std::numbers::pi *
                                        static_cast<double>((b1 * x + b2 * y) % p) / p);
      const auto got = zero_set_exp_sum(ctx, P, Q, Residue{b1}, Residue{b2});
      ASSERT_NEAR(got.real(), want.real(), 1e-9);
      ASSERT_NEAR(got.imag(), want.imag(), 1e-9);
    }
  }
  const CountReport r = exp_sum_check(ctx, P3, P3, Residue{1}, Residue{0});
  EXPECT_TRUE(r.satisfied);
  EXPECT_NEAR(r.bound, 2 * 4 * std::sqrt(101.0), 1e-9);
}

TEST(ExpSum, Preconditions) {
  const FieldCtx ctx(101);
  const Poly P3 = falling_product_poly(ctx, 3);
  EXPECT_THROW(exp_sum_check(ctx, P3, P3, Residue{0}, Residue{0}), PreconditionError);
  // phi(x, 2x) = x - 2y is itself linear.
  EXPECT_THROW(exp_sum_check(ctx, Poly({0, 1}), Poly({0, 2}), Residue{1}, Residue{99}),
               PreconditionError);
}

#include "factlab/fourier.hpp"

#include <cmath>

#include "factlab/constructions.hpp"
#include "factlab/errors.hpp"
#include "factlab/irreducibility.hpp"
#include "factlab/numeric.hpp"

namespace factlab {
namespace {

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

}  // namespace

SpectrumReport spectrum(const FieldCtx& ctx, const Progression& I) {
  validate(ctx, I);
  const u64 p = ctx.modulus();
  const double pd = static_cast<double>(p);
  const u64 n = I.length;
  const u64 step = ctx.reduce(I.step);

  SpectrumReport out;
  out.magnitudes.resize(p);
  CompensatedSum l1;
  for (u64 r = 0; r < p; ++r) {
    const u64 t = ctx.mul(r, step);
    double mag;
    if (t == 0) {
      mag = static_cast<double>(n);
    } else {
      const u64 nt = mulmod(n % p, t, p);
      mag = std::abs(std::sin(kPi * static_cast<double>(nt) / pd) /
                     std::sin(kPi * static_cast<double>(t) / pd));
    }
    out.magnitudes[r] = mag;
    l1.add(mag);
  }
  out.l1 = l1.value();
  return out;
}

std::vector<std::complex<double>> complex_spectrum(const FieldCtx& ctx,
                                                   const Progression& I) {
  validate(ctx, I);
  const u64 p = ctx.modulus();
  const u64 two_p = 2 * p;
  const double pd = static_cast<double>(p);
  const u64 n = I.length;
  const u64 step = ctx.reduce(I.step);

  std::vector<std::complex<double>> out(p);
  for (u64 r = 0; r < p; ++r) {
    const u64 t = ctx.mul(r, step);
    // e^{-2 pi i r a / p} * sum_{i<N} e^{-2 pi i t i / p}
    //   = e^{-pi i (2 r a + t (N-1)) / p} * sin(pi N t / p) / sin(pi t / p).
    const u64 ra = ctx.mul(r, I.start);
    double ratio;
    u64 phase_num;
    if (t == 0) {
      ratio = static_cast<double>(n);
      phase_num = (2 * ra) % two_p;
    } else {
      const u64 nt = mulmod(n, t, two_p);
      ratio = std::sin(kPi * static_cast<double>(nt) / pd) /
              std::sin(kPi * static_cast<double>(t) / pd);
      phase_num = (2 * ra + mulmod(n - 1, t, two_p)) % two_p;
    }
    const double phase = -kPi * static_cast<double>(phase_num) / pd;
    out[r] = std::polar(ratio, phase);
  }
  return out;
}

std::complex<double> reconstruct_indicator(
    const FieldCtx& ctx, const std::vector<std::complex<double>>& transform,
    u64 x) {
  const u64 p = ctx.modulus();
  CompensatedComplexSum sum;
  for (u64 r = 0; r < p; ++r) {
    sum.add(transform[r] * unit_root(ctx.mul(r, ctx.reduce(x)), p));
  }
  return sum.value() / static_cast<double>(p);
}

bool inversion_check(const FieldCtx& ctx, const Progression& I, Residue x) {
  const auto transform = complex_spectrum(ctx, I);
  const std::complex<double> value =
      reconstruct_indicator(ctx, transform, x.value);
  const double expected = contains(ctx, I, x.value) ? 1.0 : 0.0;
  return std::abs(value - expected) <= kInversionTolerance;
}

CountReport fourier_error_bound(const FieldCtx& ctx, const Poly& P,
                                const Poly& Q, const Progression& I) {
  const BivarPoly phi = phi_pair(ctx, P, Q);
  const int d = phi.total_degree();
  if (d < 1) throw PreconditionError("phi(P, Q) is constant");
  if (!linear_divisors(ctx, phi).empty()) {
    throw PreconditionError("phi(P, Q) has a linear divisor");
  }
  const u64 p = ctx.modulus();
  const u64 J = count_full(ctx, P, Q);
  const u64 JI = count_interval(ctx, P, Q, I);
  const double s1 = spectrum(ctx, I).l1;
  const double pd = static_cast<double>(p);

  CountReport r;
  r.degree = d;
  r.observed = static_cast<double>(JI);
  const u128 n2 = static_cast<u128>(I.length) * I.length;
  r.reference = static_cast<double>(static_cast<long double>(n2) * J /
                                    (static_cast<long double>(pd) * pd));
  r.bound = (s1 * s1 / (pd * pd)) * 2.0 * d * d * std::sqrt(pd);

  // |JI - N^2 J / p^2| with the numerator JI p^2 - N^2 J taken exactly.
  const u128 lhs = static_cast<u128>(JI) * p * p;
  const u128 rhs = n2 * J;
  const u128 num = lhs > rhs ? lhs - rhs : rhs - lhs;
  const long double gap = static_cast<long double>(num) /
                          (static_cast<long double>(pd) * pd);
  r.satisfied = gap <= static_cast<long double>(r.bound);
  return r;
}

}  // namespace factlab

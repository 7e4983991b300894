#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "factlab/field.hpp"
#include "factlab/poly.hpp"
#include "factlab/progression.hpp"

namespace factlab {

/// An observed count checked against reference +- bound.
struct CountReport {
  double observed = 0.0;
  double reference = 0.0;
  double bound = 0.0;
  int degree = 0;  // total degree of the curve the report is about
  bool satisfied = false;
};

inline constexpr int kMaxCountDegree = 64;

/// Number of zeros of phi(P, Q) in F_p x F_p.
///
/// P != Q: pairs with P(x) == Q(y), from a value histogram of Q.
/// P == Q: sum of squared value multiplicities, minus the p diagonal pairs,
/// plus the diagonal points where P'(x) == 0 (phi(P,P)(x,x) == P'(x)).
u64 count_full(const FieldCtx& ctx, const Poly& P, const Poly& Q);

/// Same count restricted to I x I.
u64 count_interval(const FieldCtx& ctx, const Poly& P, const Poly& Q,
                   const Progression& I);

/// |P(I)|.
u64 image_count(const FieldCtx& ctx, const Poly& P, const Progression& I);

/// |P(I) intersect Q(I)|.
u64 intersection_count(const FieldCtx& ctx, const Poly& P, const Poly& Q,
                       const Progression& I);

/// |J - p| <= (d-1)(d-2) sqrt(p) + d - 1 with d = deg phi(P, Q). The flag is
/// decided in exact integer arithmetic. PreconditionError if phi is constant.
CountReport langweil_report(const FieldCtx& ctx, const Poly& P, const Poly& Q);

/// Sum over zeros (x, y) of phi(P, Q) of e^{2 pi i (b1 x + b2 y) / p}.
std::complex<double> zero_set_exp_sum(const FieldCtx& ctx, const Poly& P,
                                      const Poly& Q, Residue b1, Residue b2);

/// |zero_set_exp_sum| against 2 d^2 sqrt(p), with 1e-6 relative slack.
/// PreconditionError for (b1, b2) == (0, 0) or when phi(P, Q) is divisible by
/// some b1 x + b2 y + c.
CountReport exp_sum_check(const FieldCtx& ctx, const Poly& P, const Poly& Q,
                          Residue b1, Residue b2);

inline constexpr double kExpSumRelativeSlack = 1e-6;

}  // namespace factlab

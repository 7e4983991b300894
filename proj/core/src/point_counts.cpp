#include "factlab/point_counts.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "factlab/constructions.hpp"
#include "factlab/errors.hpp"
#include "factlab/irreducibility.hpp"
#include "factlab/numeric.hpp"
#include "factlab/residue_set.hpp"

namespace factlab {

namespace {

void check_pair(const FieldCtx& ctx, const Poly& P, const Poly& Q) {
  if (P.is_constant() || Q.is_constant()) {
    throw PreconditionError("point counts need nonconstant P and Q");
  }
  if (P.degree() > kMaxCountDegree || Q.degree() > kMaxCountDegree) {
    throw PreconditionError("point counts support degrees up to " +
                            std::to_string(kMaxCountDegree));
  }
  if (ctx.modulus() > (u64{1} << 32)) {
    throw BudgetError("dense value tables need p < 2^32");
  }
}

std::vector<u64> all_residues(u64 p) {
  std::vector<u64> xs(p);
  for (u64 x = 0; x < p; ++x) xs[x] = x;
  return xs;
}

std::vector<u64> evaluate(const FieldCtx& ctx, const Poly& P,
                          const std::vector<u64>& xs) {
  std::vector<u64> out(xs.size());
  P.eval_many(ctx, xs, out);
  return out;
}

u64 critical_points(const FieldCtx& ctx, const Poly& P,
                    const std::vector<u64>& xs) {
  const Poly dP = P.derivative(ctx);
  u64 n = 0;
  for (u64 x : xs) n += dP.eval(ctx, x) == 0 ? 1 : 0;
  return n;
}

// Number of zeros of phi(P,Q) on X x X, from value lists.
u64 count_on(const FieldCtx& ctx, const Poly& P, const Poly& Q,
             const std::vector<u64>& xs) {
  std::vector<u64> qv = evaluate(ctx, Q, xs);
  std::sort(qv.begin(), qv.end());
  if (P == Q) {
    u64 sq = 0;
    for (std::size_t i = 0; i < qv.size();) {
      std::size_t k = i;
      while (k < qv.size() && qv[k] == qv[i]) ++k;
      const u64 m = k - i;
      sq += m * m;
      i = k;
    }
    return sq - xs.size() + critical_points(ctx, P, xs);
  }
  const std::vector<u64> pv = evaluate(ctx, P, xs);
  u64 total = 0;
  for (u64 v : pv) {
    auto [lo, hi] = std::equal_range(qv.begin(), qv.end(), v);
    total += static_cast<u64>(hi - lo);
  }
  return total;
}

}  // namespace

u64 count_full(const FieldCtx& ctx, const Poly& P, const Poly& Q) {
  check_pair(ctx, P, Q);
  const u64 p = ctx.modulus();
  const std::vector<u64> xs = all_residues(p);
  std::vector<std::uint32_t> hist(p, 0);
  for (u64 v : evaluate(ctx, Q, xs)) ++hist[v];
  if (P == Q) {
    u64 sq = 0;
    for (std::uint32_t m : hist) sq += static_cast<u64>(m) * m;
    return sq - p + critical_points(ctx, P, xs);
  }
  u64 total = 0;
  for (u64 v : evaluate(ctx, P, xs)) total += hist[v];
  return total;
}

u64 count_interval(const FieldCtx& ctx, const Poly& P, const Poly& Q,
                   const Progression& I) {
  check_pair(ctx, P, Q);
  return count_on(ctx, P, Q, elements(ctx, I));
}

u64 image_count(const FieldCtx& ctx, const Poly& P, const Progression& I) {
  if (P.is_constant()) throw PreconditionError("image_count needs deg P >= 1");
  const std::vector<u64> xs = elements(ctx, I);
  ResidueSet img(ctx.modulus());
  for (u64 v : evaluate(ctx, P, xs)) img.insert(v);
  return img.size();
}

u64 intersection_count(const FieldCtx& ctx, const Poly& P, const Poly& Q,
                       const Progression& I) {
  if (P.is_constant() || Q.is_constant()) {
    throw PreconditionError("intersection_count needs nonconstant P and Q");
  }
  const std::vector<u64> xs = elements(ctx, I);
  ResidueSet a(ctx.modulus());
  ResidueSet b(ctx.modulus());
  for (u64 v : evaluate(ctx, P, xs)) a.insert(v);
  for (u64 v : evaluate(ctx, Q, xs)) b.insert(v);
  return (a & b).size();
}

CountReport langweil_report(const FieldCtx& ctx, const Poly& P,
                            const Poly& Q) {
  const int d = phi_pair(ctx, P, Q).total_degree();
  if (d <= 0) throw PreconditionError("phi(P, Q) is constant");
  const u64 p = ctx.modulus();
  const u64 J = count_full(ctx, P, Q);

  CountReport r;
  r.observed = static_cast<double>(J);
  r.reference = static_cast<double>(p);
  r.degree = d;
  const double k = static_cast<double>(d - 1) * (d - 2);
  r.bound = k * std::sqrt(static_cast<double>(p)) + (d - 1);

  // |J - p| - (d-1) <= k sqrt(p), squared when the left side is positive.
  const u64 gap = J > p ? J - p : p - J;
  const u64 kk = static_cast<u64>(d - 1) * static_cast<u64>(d - 2);
  if (gap <= static_cast<u64>(d - 1)) {
    r.satisfied = true;
  } else {
    const u128 e = gap - static_cast<u64>(d - 1);
    r.satisfied = e * e <= static_cast<u128>(kk) * kk * p;
  }
  return r;
}

std::complex<double> zero_set_exp_sum(const FieldCtx& ctx, const Poly& P,
                                      const Poly& Q, Residue b1, Residue b2) {
  check_pair(ctx, P, Q);
  const u64 p = ctx.modulus();
  const std::vector<u64> xs = all_residues(p);
  const std::vector<u64> qv = evaluate(ctx, Q, xs);
  const std::vector<u64> pv = P == Q ? qv : evaluate(ctx, P, xs);

  // Counting sort of y by Q(y): bucket v is order[head[v] .. head[v+1]).
  std::vector<std::uint32_t> head(p + 1, 0);
  for (u64 v : qv) ++head[v + 1];
  for (u64 v = 0; v < p; ++v) head[v + 1] += head[v];
  std::vector<std::uint32_t> order(p);
  {
    std::vector<std::uint32_t> fill(head.begin(), head.end() - 1);
    for (u64 y = 0; y < p; ++y) order[fill[qv[y]]++] = static_cast<std::uint32_t>(y);
  }

  // Histogram of b1 x + b2 y over the zero set, then one root per class.
  std::vector<u64> hist(p, 0);
  const u64 c1 = ctx.reduce(b1.value);
  const u64 c2 = ctx.reduce(b2.value);
  const bool same = P == Q;
  for (u64 x = 0; x < p; ++x) {
    const u64 v = pv[x];
    const u64 bx = ctx.mul(c1, x);
    for (std::uint32_t k = head[v]; k < head[v + 1]; ++k) {
      const u64 y = order[k];
      if (same && y == x) continue;
      ++hist[ctx.add(bx, ctx.mul(c2, y))];
    }
  }
  if (same) {
    const Poly dP = P.derivative(ctx);
    for (u64 x = 0; x < p; ++x) {
      if (dP.eval(ctx, x) == 0) ++hist[ctx.mul(ctx.add(c1, c2), x)];
    }
  }
  CompensatedComplexSum sum;
  for (u64 t = 0; t < p; ++t) {
    if (hist[t] != 0) sum.add(static_cast<double>(hist[t]) * unit_root(t, p));
  }
  return sum.value();
}

CountReport exp_sum_check(const FieldCtx& ctx, const Poly& P, const Poly& Q,
                          Residue b1, Residue b2) {
  if (ctx.reduce(b1.value) == 0 && ctx.reduce(b2.value) == 0) {
    throw PreconditionError("exponential sum needs (b1, b2) != (0, 0)");
  }
  const BivarPoly phi = phi_pair(ctx, P, Q);
  const int d = phi.total_degree();
  if (d < 1) throw PreconditionError("phi(P, Q) is constant");
  const LinearForm dir = normalize_direction(ctx, b1.value, b2.value);
  for (const LinearForm& l : linear_divisors(ctx, phi)) {
    if (l.b1 == dir.b1 && l.b2 == dir.b2) {
      throw PreconditionError("phi(P, Q) is divisible by " +
                              std::to_string(b1.value) + "x + " +
                              std::to_string(b2.value) + "y + c");
    }
  }
  CountReport r;
  r.observed = std::abs(zero_set_exp_sum(ctx, P, Q, b1, b2));
  r.reference = 0.0;
  r.degree = d;
  r.bound = 2.0 * d * d * std::sqrt(static_cast<double>(ctx.modulus()));
  r.satisfied = r.observed <= r.bound * (1.0 + kExpSumRelativeSlack);
  return r;
}

}  // namespace factlab

#include "factlab/constructions.hpp"

#include <string>

#include "factlab/errors.hpp"

namespace factlab {
namespace {

// C(n, k) mod p for 0 <= k <= n < p via the multiplicative formula.
u64 binomial_mod(const FieldCtx& ctx, int n, int k) {
  if (k < 0 || k > n) return 0;
  u64 num = 1;
  u64 den = 1;
  for (int i = 0; i < k; ++i) {
    num = ctx.mul(num, ctx.reduce(static_cast<u64>(n - i)));
    den = ctx.mul(den, ctx.reduce(static_cast<u64>(i + 1)));
  }
  return ctx.mul(num, ctx.inv(den));
}

BivarPoly divide_exact(const FieldCtx& ctx, const BivarPoly& f, u64 beta,
                       u64 gamma, const char* what) {
  LinearDivision div = divide_by_linear(ctx, f, beta, gamma);
  if (!div.exact()) {
    throw InternalError(std::string("nonzero remainder dividing by ") + what);
  }
  return div.quotient;
}

}  // namespace

Poly falling_product_poly(const FieldCtx& ctx, int j) {
  if (j < 0 || static_cast<u64>(j) >= ctx.modulus()) {
    throw RangeError("P_j needs 0 <= j < p, got j=" + std::to_string(j));
  }
  Poly acc = Poly::constant(1);
  for (int i = 1; i <= j; ++i) {
    acc = mul(ctx, acc, Poly(std::vector<u64>{ctx.reduce(i), 1}));
  }
  return acc;
}

Poly dickson_poly(const FieldCtx& ctx, int d, Residue a) {
  if (d < 1 || static_cast<u64>(d) >= ctx.modulus()) {
    throw RangeError("Dickson degree must satisfy 1 <= d < p, got d=" +
                     std::to_string(d));
  }
  std::vector<u64> c(static_cast<std::size_t>(d) + 1, 0);
  const u64 minus_a = ctx.neg(ctx.reduce(a.value));
  u64 power = 1;  // (-a)^i
  for (int i = 0; 2 * i <= d; ++i) {
    u64 factor = binomial_mod(ctx, d - i, i);
    if (i >= 1) factor = ctx.add(factor, binomial_mod(ctx, d - i - 1, i - 1));
    c[d - 2 * i] = ctx.mul(factor, power);
    power = ctx.mul(power, minus_a);
  }
  return Poly(std::move(c));
}

BivarPoly phi_pair(const FieldCtx& ctx, const Poly& P, const Poly& Q) {
  if (P.is_constant() || Q.is_constant()) {
    throw PreconditionError("phi_pair needs nonconstant P and Q");
  }
  const BivarPoly diff =
      sub(ctx, BivarPoly::from_x(P), BivarPoly::from_y(Q));
  if (!(P == Q)) return diff;
  // x - y == x + (p-1) y + 0.
  return divide_exact(ctx, diff, ctx.modulus() - 1, 0, "x - y");
}

BivarPoly q_kj(const FieldCtx& ctx, int k, int j) {
  const u64 p = ctx.modulus();
  if (k < 1 || k > j || static_cast<u64>(j) + 2 >= p) {
    throw RangeError("Q_kj needs 1 <= k <= j < p-2, got k=" +
                     std::to_string(k) + ", j=" + std::to_string(j));
  }
  const Poly Pk = falling_product_poly(ctx, k);
  const Poly Pj = falling_product_poly(ctx, j);
  const BivarPoly diff =
      sub(ctx, BivarPoly::from_x(Pk), BivarPoly::from_y(Pj));
  if (k != j) return diff;

  BivarPoly q = divide_exact(ctx, diff, p - 1, 0, "x - y");
  if (j % 2 == 0) {
    q = divide_exact(ctx, q, 1, ctx.reduce(static_cast<u64>(j) + 1),
                     "x + y + j + 1");
  }
  return q;
}

}  // namespace factlab

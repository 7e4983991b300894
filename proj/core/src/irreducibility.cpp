#include "factlab/irreducibility.hpp"

#include <numeric>
#include <string>

#include "factlab/constructions.hpp"
#include "factlab/errors.hpp"

namespace factlab {

SchmidtPsi schmidt_psi(const BivarPoly& f) {
  const int d = f.deg_y();
  if (d < 1) {
    throw PreconditionError("schmidt_psi needs positive degree in y");
  }
  const Poly g0 = f.y_coefficient(d);
  if (g0.degree() != 0) {
    throw PreconditionError("schmidt_psi needs a nonzero constant g_0");
  }
  int best_num = 0;
  int best_den = 1;
  for (int i = 1; i <= d; ++i) {
    const int deg = f.y_coefficient(d - i).degree();
    if (deg < 0) continue;
    if (deg * best_den > best_num * i) {
      best_num = deg;
      best_den = i;
    }
  }
  const int g = std::gcd(best_num, best_den);
  SchmidtPsi out;
  out.numerator = best_num / g;
  out.denominator = best_den / g;
  out.y_degree = d;
  out.coprime = out.denominator == d;
  return out;
}

MismatchCertificate dickson_mismatch(const FieldCtx& ctx, int j) {
  if (j < 5 || static_cast<u64>(j) >= ctx.modulus()) {
    throw RangeError("Dickson comparison needs 5 <= j < p, got j=" +
                     std::to_string(j));
  }
  const Poly Pj = falling_product_poly(ctx, j);
  const u64 ju = ctx.reduce(static_cast<u64>(j));

  MismatchCertificate cert;
  cert.j = j;
  // Both sides are monic in degree j.
  cert.alpha = 1;
  // D_{j,a} has no x^{j-1} term, so D(x+b) contributes j*b there.
  cert.b = ctx.mul(Pj.coeff(j - 1), ctx.inv(ju));
  // The x^{j-2} coefficient of D_{j,a}(x+b) is affine in a.
  const u64 c_at0 =
      taylor_shift(ctx, dickson_poly(ctx, j, Residue{0}), cert.b).coeff(j - 2);
  const u64 c_at1 =
      taylor_shift(ctx, dickson_poly(ctx, j, Residue{1}), cert.b).coeff(j - 2);
  const u64 slope = ctx.sub(c_at1, c_at0);
  cert.a = ctx.mul(ctx.sub(Pj.coeff(j - 2), c_at0), ctx.inv(slope));

  Poly candidate = taylor_shift(ctx, dickson_poly(ctx, j, Residue{cert.a}),
                                cert.b);
  cert.c = ctx.sub(Pj.coeff(0), candidate.coeff(0));
  candidate = add(ctx, candidate, Poly::constant(cert.c));

  for (int deg = j - 3; deg >= 1; --deg) {
    if (candidate.coeff(deg) != Pj.coeff(deg)) {
      cert.mismatch_degree = deg;
      cert.falling_coeff = Pj.coeff(deg);
      cert.dickson_coeff = candidate.coeff(deg);
      break;
    }
  }
  return cert;
}

bool indecomposable_by_degree(int j) {
  return j >= 2 && is_prime_u64(static_cast<u64>(j));
}

LinearForm normalize_direction(const FieldCtx& ctx, u64 b1, u64 b2) {
  b1 = ctx.reduce(b1);
  b2 = ctx.reduce(b2);
  if (b1 == 0 && b2 == 0) {
    throw PreconditionError("direction (0, 0) is not a linear form");
  }
  if (b1 == 0) return LinearForm{0, 1, 0};
  return LinearForm{1, ctx.mul(b2, ctx.inv(b1)), 0};
}

namespace {

// Shifts c in F_p at which every polynomial in `coeffs` vanishes.
std::vector<u64> common_roots(const FieldCtx& ctx,
                              const std::vector<Poly>& coeffs) {
  const Poly* pivot = nullptr;
  for (const auto& h : coeffs) {
    if (!h.is_zero() && (pivot == nullptr || h.degree() < pivot->degree())) {
      pivot = &h;
    }
  }
  std::vector<u64> roots;
  if (pivot == nullptr || pivot->degree() == 0) return roots;
  for (u64 c = 0; c < ctx.modulus(); ++c) {
    if (pivot->eval(ctx, c) != 0) continue;
    bool all = true;
    for (const auto& h : coeffs) {
      if (h.eval(ctx, c) != 0) {
        all = false;
        break;
      }
    }
    if (all) roots.push_back(c);
  }
  return roots;
}

}  // namespace

std::vector<LinearForm> linear_divisors(const FieldCtx& ctx,
                                        const BivarPoly& f) {
  if (f.is_zero()) {
    throw PreconditionError("the zero polynomial is divisible by everything");
  }
  const int d = f.total_degree();
  std::vector<LinearForm> out;
  if (d <= 0) return out;
  const std::vector<u64> top = f.homogeneous_part(d);

  // Direction (0, 1): y + c divides f iff f(x, -c) == 0 identically.
  if (top[d] == 0) {
    std::vector<Poly> coeffs;
    for (int i = 0; i <= f.deg_x(); ++i) {
      // x^i coefficient as a polynomial in c: sum_j f_ij (-c)^j.
      const Poly col = f.x_coefficient(i);
      std::vector<u64> h(col.coefficients().begin(), col.coefficients().end());
      for (std::size_t jj = 1; jj < h.size(); jj += 2) h[jj] = ctx.neg(h[jj]);
      coeffs.emplace_back(std::move(h));
    }
    for (u64 c : common_roots(ctx, coeffs)) out.push_back(LinearForm{0, 1, c});
  }

  // Directions (1, t): x + t*y divides the top part iff top(t, -1) == 0.
  const u64 minus_one = ctx.modulus() - 1;
  for (u64 t = 0; t < ctx.modulus(); ++t) {
    u64 acc = 0;
    for (int i = d; i >= 0; --i) {
      // top(x, y) = sum_i top[i] x^i y^{d-i}, evaluated at (t, -1).
      const u64 term = (d - i) % 2 == 0 ? top[i] : ctx.neg(top[i]);
      acc = ctx.add(ctx.mul(acc, t), term);
    }
    if (acc != 0) continue;

    // Substitute x = -t*y - c; grid index (power of y, power of c).
    BivarPoly u;
    u.set(1, 0, ctx.neg(t));
    u.set(0, 1, minus_one);
    u.trim();
    BivarPoly g;
    BivarPoly u_pow = BivarPoly::from_x(Poly::constant(1));
    for (int i = 0; i <= f.deg_x(); ++i) {
      for (int j = 0; j <= f.deg_y(); ++j) {
        const u64 fij = f.coeff(i, j);
        if (fij == 0) continue;
        for (int a = 0; a <= u_pow.deg_x(); ++a) {
          for (int b = 0; b <= u_pow.deg_y(); ++b) {
            const u64 v = u_pow.coeff(a, b);
            if (v == 0) continue;
            g.set(a + j, b, ctx.add(g.coeff(a + j, b), ctx.mul(fij, v)));
          }
        }
      }
      u_pow = mul(ctx, u_pow, u);
    }
    g.trim();
    std::vector<Poly> coeffs;
    for (int k = 0; k <= g.deg_x(); ++k) coeffs.push_back(g.x_coefficient(k));
    for (u64 c : common_roots(ctx, coeffs)) out.push_back(LinearForm{1, t, c});
  }
  return out;
}

}  // namespace factlab

#pragma once

#include "factlab/bivariate.hpp"
#include "factlab/field.hpp"
#include "factlab/poly.hpp"

namespace factlab {

/// (x+1)(x+2)...(x+j), expanded. j == 0 gives the constant 1.
/// Throws RangeError for j >= p (two roots would coincide).
Poly falling_product_poly(const FieldCtx& ctx, int j);

/// Dickson polynomial D_{d,a}: the unique polynomial with
/// D(x + a/x) = x^d + (a/x)^d. Requires 1 <= d < p.
///
/// Coefficient of x^{d-2i} is d/(d-i) * C(d-i, i) * (-a)^i; the rational
/// factor is the integer C(d-i, i) + C(d-i-1, i-1), so no division is needed.
Poly dickson_poly(const FieldCtx& ctx, int d, Residue a);

/// P(x) - Q(y) when P != Q; the exact quotient (P(x) - P(y)) / (x - y) when
/// P == Q. Both polynomials must be nonconstant (PreconditionError).
BivarPoly phi_pair(const FieldCtx& ctx, const Poly& P, const Poly& Q);

/// P_k(x) - P_j(y) with every linear factor removed, for 1 <= k <= j < p-2:
///   k != j          : P_k(x) - P_j(y)
///   k == j, j odd   : (P_j(x) - P_j(y)) / (x - y)
///   k == j, j even  : additionally divided by (x + y + j + 1), the factor
///                     coming from P_j(x) = P_j(-x-j-1).
/// Every division is checked; a nonzero remainder raises InternalError.
BivarPoly q_kj(const FieldCtx& ctx, int k, int j);

}  // namespace factlab

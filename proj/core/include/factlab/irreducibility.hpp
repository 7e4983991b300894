#pragma once

#include <optional>
#include <vector>

#include "factlab/bivariate.hpp"
#include "factlab/field.hpp"

namespace factlab {

/// psi(f) = max_{1<=i<=d} deg g_i / i for f = g_0 y^d + g_1(x) y^{d-1} + ...
/// + g_d(x), in lowest terms. `coprime` is the irreducibility hypothesis:
/// psi == m/d with gcd(m, d) == 1, i.e. the reduced denominator equals d.
struct SchmidtPsi {
  int numerator = 0;
  int denominator = 1;
  int y_degree = 0;
  bool coprime = false;
};

/// Throws PreconditionError unless deg_y(f) >= 1 and g_0 is a nonzero
/// constant.
SchmidtPsi schmidt_psi(const BivarPoly& f);

/// Outcome of matching P_j against alpha*D_{j,a}(x+b) + c.
///
/// alpha, b and a are forced by the coefficients of x^j, x^{j-1} and x^{j-2};
/// c by the constant term. mismatch_degree is the first remaining degree
/// (searched j-3, j-4, then downwards) where the two polynomials differ.
struct MismatchCertificate {
  int j = 0;
  u64 alpha = 0;
  u64 a = 0;
  u64 b = 0;
  u64 c = 0;
  std::optional<int> mismatch_degree;
  u64 falling_coeff = 0;   // coefficient of P_j at mismatch_degree
  u64 dickson_coeff = 0;   // coefficient of alpha*D(x+b)+c there
  bool in_top_five() const noexcept {
    return mismatch_degree && *mismatch_degree >= j - 4;
  }
  bool found() const noexcept { return mismatch_degree.has_value(); }
};

/// Requires 5 <= j < p (RangeError otherwise).
MismatchCertificate dickson_mismatch(const FieldCtx& ctx, int j);

/// Prime degree rules out a nontrivial composition g(h(x)). Composite degree
/// is inconclusive and reported as false.
bool indecomposable_by_degree(int j);

/// b1*x + b2*y + c, normalized so that (b1, b2) is (1, t) or (0, 1).
struct LinearForm {
  u64 b1 = 0;
  u64 b2 = 0;
  u64 c = 0;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// Normalizes a nonzero direction (b1, b2) to (1, t) or (0, 1).
LinearForm normalize_direction(const FieldCtx& ctx, u64 b1, u64 b2);

/// Every linear form over F_p dividing f. Throws PreconditionError for f == 0.
///
/// Candidate directions are the F_p-rational linear factors of the top-degree
/// homogeneous part; for each, the shifts c are the common roots of the
/// coefficients of f restricted to the line.
std::vector<LinearForm> linear_divisors(const FieldCtx& ctx,
                                        const BivarPoly& f);

}  // namespace factlab

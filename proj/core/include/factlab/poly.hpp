#pragma once

#include <span>
#include <string>
#include <vector>

#include "factlab/field.hpp"

namespace factlab {

/// Univariate polynomial over F_p, coefficients in ascending degree.
///
/// The modulus is not stored; every operation that needs arithmetic takes the
/// FieldCtx explicitly. Trailing zero coefficients are trimmed, so the zero
/// polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<u64> coeffs);

  static Poly constant(u64 c) { return Poly(std::vector<u64>{c}); }
  static Poly monomial(int degree, u64 c = 1);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  u64 coeff(int i) const noexcept {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : 0;
  }
  u64 leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  std::span<const u64> coefficients() const noexcept { return coeffs_; }

  u64 eval(const FieldCtx& ctx, u64 x) const noexcept;
  /// Evaluates at every point of xs, writing into out (same size).
  void eval_many(const FieldCtx& ctx, std::span<const u64> xs,
                 std::span<u64> out) const;

  Poly derivative(const FieldCtx& ctx) const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<u64> coeffs_;
};

Poly add(const FieldCtx& ctx, const Poly& a, const Poly& b);
Poly sub(const FieldCtx& ctx, const Poly& a, const Poly& b);
Poly mul(const FieldCtx& ctx, const Poly& a, const Poly& b);
Poly scale(const FieldCtx& ctx, const Poly& a, u64 c);
/// a(x + shift).
Poly taylor_shift(const FieldCtx& ctx, const Poly& a, u64 shift);

/// Human-readable form, e.g. "x^3 + 6x^2 + 11x + 6".
std::string to_string(const Poly& p, char var = 'x');

}  // namespace factlab

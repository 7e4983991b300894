#include "factlab/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace factlab {

Poly::Poly(std::vector<u64> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monomial(int degree, u64 c) {
  std::vector<u64> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return Poly(std::move(v));
}

u64 Poly::eval(const FieldCtx& ctx, u64 x) const noexcept {
  if (coeffs_.empty()) return 0;
  // Horner in Montgomery form: acc*xm stays in the Montgomery domain and
  // coefficients are lifted once per step.
  const u64 xm = ctx.to_mont(x);
  u64 acc = ctx.to_mont(coeffs_.back());
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    acc = ctx.add(ctx.mont_mul(acc, xm), ctx.to_mont(coeffs_[i]));
  }
  return ctx.from_mont(acc);
}

void Poly::eval_many(const FieldCtx& ctx, std::span<const u64> xs,
                     std::span<u64> out) const {
  if (xs.size() != out.size()) {
    throw std::invalid_argument("eval_many: size mismatch");
  }
  if (coeffs_.empty()) {
    std::fill(out.begin(), out.end(), 0);
    return;
  }
  std::vector<u64> cm(coeffs_.size());
  for (std::size_t i = 0; i < cm.size(); ++i) cm[i] = ctx.to_mont(coeffs_[i]);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const u64 xm = ctx.to_mont(xs[k]);
    u64 acc = cm.back();
    for (std::size_t i = cm.size() - 1; i-- > 0;) {
      acc = ctx.add(ctx.mont_mul(acc, xm), cm[i]);
    }
    out[k] = ctx.from_mont(acc);
  }
}

Poly Poly::derivative(const FieldCtx& ctx) const {
  if (coeffs_.size() <= 1) return Poly{};
  std::vector<u64> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d[i - 1] = ctx.mul(coeffs_[i], ctx.reduce(i));
  }
  return Poly(std::move(d));
}

Poly add(const FieldCtx& ctx, const Poly& a, const Poly& b) {
  const int n = std::max(a.degree(), b.degree()) + 1;
  std::vector<u64> c(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) c[i] = ctx.add(a.coeff(i), b.coeff(i));
  return Poly(std::move(c));
}

Poly sub(const FieldCtx& ctx, const Poly& a, const Poly& b) {
  const int n = std::max(a.degree(), b.degree()) + 1;
  std::vector<u64> c(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) c[i] = ctx.sub(a.coeff(i), b.coeff(i));
  return Poly(std::move(c));
}

Poly mul(const FieldCtx& ctx, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  std::vector<u64> c(static_cast<std::size_t>(a.degree() + b.degree()) + 1, 0);
  for (int i = 0; i <= a.degree(); ++i) {
    for (int j = 0; j <= b.degree(); ++j) {
      c[i + j] = ctx.add(c[i + j], ctx.mul(a.coeff(i), b.coeff(j)));
    }
  }
  return Poly(std::move(c));
}

Poly scale(const FieldCtx& ctx, const Poly& a, u64 c) {
  std::vector<u64> out(a.coefficients().begin(), a.coefficients().end());
  for (auto& v : out) v = ctx.mul(v, c);
  return Poly(std::move(out));
}

Poly taylor_shift(const FieldCtx& ctx, const Poly& a, u64 shift) {
  // Horner with (x + shift) as the variable.
  if (a.is_zero()) return Poly{};
  const Poly lin(std::vector<u64>{ctx.reduce(shift), 1});
  Poly acc = Poly::constant(a.leading());
  for (int i = a.degree() - 1; i >= 0; --i) {
    acc = add(ctx, mul(ctx, acc, lin), Poly::constant(a.coeff(i)));
  }
  return acc;
}

std::string to_string(const Poly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const u64 c = p.coeff(i);
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1 || i == 0) out += std::to_string(c);
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace factlab

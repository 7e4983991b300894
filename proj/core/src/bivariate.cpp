#include "factlab/bivariate.hpp"

#include <algorithm>

namespace factlab {

BivarPoly::BivarPoly(int deg_x, int deg_y) { resize(deg_x + 1, deg_y + 1); }

BivarPoly BivarPoly::from_x(const Poly& p) {
  BivarPoly f;
  for (int i = 0; i <= p.degree(); ++i) f.set(i, 0, p.coeff(i));
  f.trim();
  return f;
}

BivarPoly BivarPoly::from_y(const Poly& q) {
  BivarPoly f;
  for (int j = 0; j <= q.degree(); ++j) f.set(0, j, q.coeff(j));
  f.trim();
  return f;
}

void BivarPoly::resize(int rows, int cols) {
  rows = std::max(rows, 0);
  cols = std::max(cols, 0);
  if (rows == rows_ && cols == cols_) return;
  std::vector<u64> next(static_cast<std::size_t>(rows) * cols, 0);
  for (int i = 0; i < std::min(rows, rows_); ++i) {
    for (int j = 0; j < std::min(cols, cols_); ++j) {
      next[static_cast<std::size_t>(i) * cols + j] = cells_[idx(i, j)];
    }
  }
  rows_ = rows;
  cols_ = cols;
  cells_ = std::move(next);
}

void BivarPoly::set(int i, int j, u64 v) {
  if (i >= rows_ || j >= cols_) {
    if (v == 0) return;
    resize(std::max(rows_, i + 1), std::max(cols_, j + 1));
  }
  cells_[idx(i, j)] = v;
}

void BivarPoly::trim() {
  int rows = 0;
  int cols = 0;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (cells_[idx(i, j)] != 0) {
        rows = std::max(rows, i + 1);
        cols = std::max(cols, j + 1);
      }
    }
  }
  resize(rows, cols);
}

int BivarPoly::total_degree() const noexcept {
  int d = -1;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (cells_[idx(i, j)] != 0) d = std::max(d, i + j);
    }
  }
  return d;
}

Poly BivarPoly::y_coefficient(int j) const {
  std::vector<u64> c(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) c[i] = coeff(i, j);
  return Poly(std::move(c));
}

Poly BivarPoly::x_coefficient(int i) const {
  std::vector<u64> c(static_cast<std::size_t>(cols_));
  for (int j = 0; j < cols_; ++j) c[j] = coeff(i, j);
  return Poly(std::move(c));
}

std::vector<u64> BivarPoly::homogeneous_part(int d) const {
  std::vector<u64> out(static_cast<std::size_t>(std::max(d, 0)) + 1, 0);
  for (int i = 0; i <= d; ++i) out[i] = coeff(i, d - i);
  return out;
}

u64 BivarPoly::eval(const FieldCtx& ctx, u64 x, u64 y) const noexcept {
  return restrict_x(ctx, x).eval(ctx, y);
}

Poly BivarPoly::restrict_x(const FieldCtx& ctx, u64 x0) const {
  std::vector<u64> c(static_cast<std::size_t>(cols_), 0);
  for (int j = 0; j < cols_; ++j) {
    u64 acc = 0;
    for (int i = rows_ - 1; i >= 0; --i) {
      acc = ctx.add(ctx.mul(acc, x0), cells_[idx(i, j)]);
    }
    c[j] = acc;
  }
  return Poly(std::move(c));
}

bool operator==(const BivarPoly& a, const BivarPoly& b) noexcept {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
}

BivarPoly add(const FieldCtx& ctx, const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out(std::max(a.deg_x(), b.deg_x()), std::max(a.deg_y(), b.deg_y()));
  for (int i = 0; i <= out.deg_x(); ++i) {
    for (int j = 0; j <= out.deg_y(); ++j) {
      out.set(i, j, ctx.add(a.coeff(i, j), b.coeff(i, j)));
    }
  }
  out.trim();
  return out;
}

BivarPoly sub(const FieldCtx& ctx, const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out(std::max(a.deg_x(), b.deg_x()), std::max(a.deg_y(), b.deg_y()));
  for (int i = 0; i <= out.deg_x(); ++i) {
    for (int j = 0; j <= out.deg_y(); ++j) {
      out.set(i, j, ctx.sub(a.coeff(i, j), b.coeff(i, j)));
    }
  }
  out.trim();
  return out;
}

BivarPoly mul(const FieldCtx& ctx, const BivarPoly& a, const BivarPoly& b) {
  if (a.is_zero() || b.is_zero()) return BivarPoly{};
  BivarPoly out(a.deg_x() + b.deg_x(), a.deg_y() + b.deg_y());
  for (int i1 = 0; i1 <= a.deg_x(); ++i1) {
    for (int j1 = 0; j1 <= a.deg_y(); ++j1) {
      const u64 c1 = a.coeff(i1, j1);
      if (c1 == 0) continue;
      for (int i2 = 0; i2 <= b.deg_x(); ++i2) {
        for (int j2 = 0; j2 <= b.deg_y(); ++j2) {
          const u64 c2 = b.coeff(i2, j2);
          if (c2 == 0) continue;
          const u64 cur = out.coeff(i1 + i2, j1 + j2);
          out.set(i1 + i2, j1 + j2, ctx.add(cur, ctx.mul(c1, c2)));
        }
      }
    }
  }
  out.trim();
  return out;
}

LinearDivision divide_by_linear(const FieldCtx& ctx, const BivarPoly& f,
                                u64 beta, u64 gamma) {
  // x + beta*y + gamma = x - r(y) with r(y) = -beta*y - gamma.
  const Poly r(std::vector<u64>{ctx.neg(ctx.reduce(gamma)),
                                ctx.neg(ctx.reduce(beta))});
  const int n = f.deg_x();
  LinearDivision out;
  if (n <= 0) {
    out.remainder = f;
    return out;
  }
  // q_{n-1} = f_n; q_{i-1} = f_i + r*q_i; remainder = f_0 + r*q_0.
  std::vector<Poly> q(static_cast<std::size_t>(n));
  q[n - 1] = f.x_coefficient(n);
  for (int i = n - 1; i >= 1; --i) {
    q[i - 1] = add(ctx, f.x_coefficient(i), mul(ctx, r, q[i]));
  }
  const Poly rem = add(ctx, f.x_coefficient(0), mul(ctx, r, q[0]));

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= q[i].degree(); ++j) {
      out.quotient.set(i, j, q[i].coeff(j));
    }
  }
  out.quotient.trim();
  out.remainder = BivarPoly::from_y(rem);
  return out;
}

std::string to_string(const BivarPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int d = f.total_degree(); d >= 0; --d) {
    for (int i = d; i >= 0; --i) {
      const int j = d - i;
      const u64 c = f.coeff(i, j);
      if (c == 0) continue;
      if (!out.empty()) out += " + ";
      if (c != 1 || d == 0) out += std::to_string(c);
      if (i >= 1) out += 'x';
      if (i >= 2) out += "^" + std::to_string(i);
      if (j >= 1) out += 'y';
      if (j >= 2) out += "^" + std::to_string(j);
    }
  }
  return out;
}

}  // namespace factlab

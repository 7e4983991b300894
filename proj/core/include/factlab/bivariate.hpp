#pragma once

#include <string>
#include <vector>

#include "factlab/field.hpp"
#include "factlab/poly.hpp"

namespace factlab {

/// Dense bivariate polynomial over F_p: coefficient (i, j) multiplies x^i y^j.
///
/// The grid is trimmed so that deg_x()/deg_y() are the true partial degrees;
/// the zero polynomial has an empty grid and degree -1 everywhere.
class BivarPoly {
 public:
  BivarPoly() = default;
  /// Zero-filled grid with room for x^0..x^deg_x and y^0..y^deg_y.
  BivarPoly(int deg_x, int deg_y);

  /// P(x) viewed as a polynomial in x only.
  static BivarPoly from_x(const Poly& p);
  /// Q(y) viewed as a polynomial in y only.
  static BivarPoly from_y(const Poly& q);

  int deg_x() const noexcept { return rows_ - 1; }
  int deg_y() const noexcept { return cols_ - 1; }
  int total_degree() const noexcept;
  bool is_zero() const noexcept { return rows_ == 0; }
  bool is_constant() const noexcept { return rows_ <= 1 && cols_ <= 1; }

  u64 coeff(int i, int j) const noexcept {
    return i >= 0 && j >= 0 && i < rows_ && j < cols_ ? cells_[idx(i, j)] : 0;
  }
  /// Grows the grid if needed. Call trim() after a batch of edits.
  void set(int i, int j, u64 v);
  void trim();

  /// Coefficient of y^j as a polynomial in x.
  Poly y_coefficient(int j) const;
  /// Coefficient of x^i as a polynomial in y.
  Poly x_coefficient(int i) const;
  /// Homogeneous part of total degree d, as the list c[i] of x^i y^(d-i).
  std::vector<u64> homogeneous_part(int d) const;

  u64 eval(const FieldCtx& ctx, u64 x, u64 y) const noexcept;
  /// f(x0, y) as a polynomial in y.
  Poly restrict_x(const FieldCtx& ctx, u64 x0) const;

  friend bool operator==(const BivarPoly& a, const BivarPoly& b) noexcept;

 private:
  std::size_t idx(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * cols_ + j;
  }
  void resize(int rows, int cols);

  int rows_ = 0;
  int cols_ = 0;
  std::vector<u64> cells_;
};

BivarPoly add(const FieldCtx& ctx, const BivarPoly& a, const BivarPoly& b);
BivarPoly sub(const FieldCtx& ctx, const BivarPoly& a, const BivarPoly& b);
BivarPoly mul(const FieldCtx& ctx, const BivarPoly& a, const BivarPoly& b);

/// Result of dividing by a linear form monic in x.
struct LinearDivision {
  BivarPoly quotient;
  BivarPoly remainder;  // a polynomial in y only
  bool exact() const noexcept { return remainder.is_zero(); }
};

/// Divides f by (x + beta*y + gamma) treating f as a polynomial in x over
/// F_p[y] (synthetic division).
LinearDivision divide_by_linear(const FieldCtx& ctx, const BivarPoly& f,
                                u64 beta, u64 gamma);

/// e.g. "x^2 + xy + y^2 + 6x + 6y + 11", graded by total degree.
std::string to_string(const BivarPoly& f);

}  // namespace factlab

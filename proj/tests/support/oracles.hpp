#pragma once

// Slow, independent reference implementations. Nothing here touches the
// Montgomery code paths of the library under test.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <set>
#include <vector>

#include "factlab/bivariate.hpp"
#include "factlab/poly.hpp"

namespace oracle {

using u64 = std::uint64_t;

inline u64 mulmod(u64 a, u64 b, u64 p) {
  __extension__ using wide = unsigned __int128;
  return static_cast<u64>(static_cast<wide>(a) * b % p);
}

inline u64 powmod(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  for (b %= p; e; e >>= 1, b = mulmod(b, b, p))
    if (e & 1) r = mulmod(r, b, p);
  return r;
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<u64> primes_between(u64 lo, u64 hi) {
  std::vector<u64> out;
  for (u64 n = lo; n <= hi; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

/// n! mod p for 0 <= n <= hi, by plain repeated multiplication.
inline std::vector<u64> factorials(u64 p, u64 hi) {
  std::vector<u64> f(hi + 1);
  f[0] = 1 % p;
  for (u64 n = 1; n <= hi; ++n) f[n] = mulmod(f[n - 1], n % p, p);
  return f;
}

/// Coefficients of (x+1)...(x+j) mod p by schoolbook expansion.
inline std::vector<u64> falling_coeffs(int j, u64 p) {
  std::vector<u64> c{1};
  for (int i = 1; i <= j; ++i) {
    std::vector<u64> next(c.size() + 1, 0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k] = (next[k] + mulmod(c[k], static_cast<u64>(i) % p, p)) % p;
      next[k + 1] = (next[k + 1] + c[k]) % p;
    }
    c = std::move(next);
  }
  return c;
}

inline u64 eval(const std::vector<u64>& c, u64 x, u64 p) {
  u64 r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    r = (mulmod(r, x, p) + *it) % p;
  return r;
}

inline u64 eval(const factlab::Poly& P, u64 x, u64 p) {
  const auto s = P.coefficients();
  return eval(std::vector<u64>(s.begin(), s.end()), x, p);
}

inline u64 eval(const factlab::BivarPoly& f, u64 x, u64 y, u64 p) {
  u64 r = 0;
  for (int i = f.deg_x(); i >= 0; --i) {
    u64 row = 0;
    for (int j = f.deg_y(); j >= 0; --j) row = (mulmod(row, y, p) + f.coeff(i, j)) % p;
    r = (mulmod(r, x, p) + row) % p;
  }
  return r;
}

/// #{(x, y) in xs x ys : f(x, y) == 0}, one evaluation per pair.
inline u64 zero_count(const factlab::BivarPoly& f, const std::vector<u64>& xs,
                      const std::vector<u64>& ys, u64 p) {
  u64 n = 0;
  for (u64 x : xs) {
    // Restrict to the vertical line first; the y-loop is then univariate.
    std::vector<u64> g(static_cast<std::size_t>(f.deg_y() + 1), 0);
    for (int j = 0; j <= f.deg_y(); ++j) {
      std::vector<u64> col(static_cast<std::size_t>(f.deg_x() + 1));
      for (int i = 0; i <= f.deg_x(); ++i) col[i] = f.coeff(i, j);
      g[j] = eval(col, x, p);
    }
    for (u64 y : ys)
      if (eval(g, y, p) == 0) ++n;
  }
  return n;
}

inline std::vector<u64> all_residues(u64 p) {
  std::vector<u64> v(p);
  for (u64 i = 0; i < p; ++i) v[i] = i;
  return v;
}

inline std::vector<u64> progression(u64 start, u64 step, u64 len, u64 p) {
  std::vector<u64> v;
  for (u64 i = 0; i < len; ++i) v.push_back((start + mulmod(i, step, p)) % p);
  return v;
}

/// Naive O(p |I|) transform, sum_{x in I} e^{-2 pi i r x / p}.
inline std::vector<std::complex<double>> dft(const std::vector<u64>& I, u64 p) {
  std::vector<std::complex<double>> out(p);
  for (u64 r = 0; r < p; ++r) {
    std::complex<double> s{};
    for (u64 x : I) {
      const double ang =
          -2.0 * std::numbers::pi * static_cast<double>(mulmod(r, x, p)) / p;
      s += std::polar(1.0, ang);
    }
    out[r] = s;
  }
  return out;
}

/// |{f(x) : x in xs}|.
inline std::size_t image_size(const std::vector<u64>& c,
                              const std::vector<u64>& xs, u64 p) {
  std::set<u64> seen;
  for (u64 x : xs) seen.insert(eval(c, x, p));
  return seen.size();
}

}  // namespace oracle

#pragma once

#include <array>
#include <cstdint>
#include <optional>

namespace factlab {

// All logarithms here are natural logarithms.

/// Exponents (eps1, eps2, delta) maximizing delta subject to
///   delta <= eps1,
///   delta <= 1/2 - 2 eps1 - 2 eps2 - 2 kappa,
///   delta <= eps2 - eps1 - kappa.
struct OptimalExponents {
  double eps1 = 0.0;
  double eps2 = 0.0;
  double delta = 0.0;
};

OptimalExponents optimal_exponents(double kappa);

/// Whether the three constraints above hold (tolerance 1e-12).
bool exponent_constraints_hold(double kappa, const OptimalExponents& e);

/// Parameters of the |A(p) A(p)| argument at a concrete prime.
struct Theorem1Params {
  std::uint64_t p = 0;
  double kappa = 0.0;  // log log p / log p
  OptimalExponents exponents;
  std::uint64_t N = 0;  // floor(p^{1 - eps1})
  std::uint64_t M = 0;  // floor(p^{eps2})
  double K = 0.0;       // p / N
  double Q = 0.0;       // N / (sqrt(p) (log p)^2)
  bool constraints_hold = false;
};

/// RangeError for p < 17 or when delta <= 0 (kappa >= 1/8, which is every
/// p below roughly 2.1e11).
Theorem1Params theorem1_params(std::uint64_t p);

/// Constants of the five-case lower bound on |A_N / A_N|. The proof does not
/// pin them down; all default to 1.
struct RegimeConstants {
  double c = 1.0;
  double c1 = 1.0;
  double c2 = 1.0;
  double c3 = 1.0;
  double c4 = 1.0;
  double c5 = 1.0;
};

struct Theorem2Result {
  int regime = 0;  // 1 (N close to p) ... 5 (N close to sqrt(p) log^2 p)
  double K = 0.0;
  double Q = 0.0;
  double kappa = 0.0;
  /// Main term: p in regimes 1-2, c N Q^{1/3} (log Q)^{-2/3}, c N K^{1/2},
  /// c N Q^{1/3} in regimes 3, 4, 5.
  double bound = 0.0;
  /// Size of the O(.) term in regimes 1-2, zero otherwise.
  double error_term = 0.0;
  std::optional<double> R;  // regime 3: Q^{1/3} (log Q)^{-2/3}
  std::optional<double> M;  // regimes 1, 2, 4, 5
  /// Lower edges of regimes 1..5 with the supplied constants.
  std::array<double, 5> thresholds{};
  /// Whether thresholds are nonincreasing, as they are for large p.
  bool thresholds_ordered = false;
};

/// RangeError unless c5 sqrt(p) (log p)^2 <= N <= p.
Theorem2Result theorem2_bound(std::uint64_t p, std::uint64_t N,
                              const RegimeConstants& constants = {});

}  // namespace factlab

#include "factlab/theorem_params.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "factlab/errors.hpp"

namespace factlab {

OptimalExponents optimal_exponents(double kappa) {
  OptimalExponents e;
  e.eps1 = 1.0 / 14.0 - 4.0 * kappa / 7.0;
  e.eps2 = 1.0 / 7.0 - kappa / 7.0;
  e.delta = 1.0 / 14.0 - 4.0 * kappa / 7.0;
  return e;
}

bool exponent_constraints_hold(double kappa, const OptimalExponents& e) {
  constexpr double kTol = 1e-12;
  return e.delta <= e.eps1 + kTol &&
         e.delta <= 0.5 - 2 * e.eps1 - 2 * e.eps2 - 2 * kappa + kTol &&
         e.delta <= e.eps2 - e.eps1 - kappa + kTol;
}

Theorem1Params theorem1_params(std::uint64_t p) {
  if (p < 17) {
    throw RangeError("theorem1_params needs p >= 17, got " + std::to_string(p));
  }
  const double lp = std::log(static_cast<double>(p));
  Theorem1Params out;
  out.p = p;
  out.kappa = std::log(lp) / lp;
  out.exponents = optimal_exponents(out.kappa);
  if (out.exponents.delta <= 0.0) {
    throw RangeError("delta = " + std::to_string(out.exponents.delta) +
                     " <= 0 at p = " + std::to_string(p) +
                     " (needs log log p / log p < 1/8)");
  }
  const double pd = static_cast<double>(p);
  out.N = static_cast<std::uint64_t>(std::floor(std::pow(pd, 1.0 - out.exponents.eps1)));
  out.M = static_cast<std::uint64_t>(std::floor(std::pow(pd, out.exponents.eps2)));
  out.K = pd / static_cast<double>(out.N);
  out.Q = static_cast<double>(out.N) / (std::sqrt(pd) * lp * lp);
  out.constraints_hold = exponent_constraints_hold(out.kappa, out.exponents);
  return out;
}

Theorem2Result theorem2_bound(std::uint64_t p, std::uint64_t N,
                              const RegimeConstants& k) {
  if (p < 3) throw RangeError("theorem2_bound needs p >= 3");
  const double pd = static_cast<double>(p);
  const double nd = static_cast<double>(N);
  const double lp = std::log(pd);
  const double floor5 = k.c5 * std::sqrt(pd) * lp * lp;
  if (nd < floor5 || N > p) {
    throw RangeError("N = " + std::to_string(N) + " outside [" +
                     std::to_string(floor5) + ", " + std::to_string(p) + "]");
  }

  Theorem2Result r;
  r.K = pd / nd;
  r.Q = nd / (std::sqrt(pd) * lp * lp);
  r.kappa = std::log(lp) / lp;
  r.thresholds = {
      k.c1 * std::pow(pd, 13.0 / 14.0) * std::pow(lp, 4.0 / 7.0),
      k.c2 * std::pow(pd, 7.0 / 8.0) * lp,
      k.c3 * std::pow(pd, 4.0 / 5.0) * std::pow(lp, 8.0 / 5.0),
      k.c4 * std::pow(pd, 4.0 / 5.0) * std::pow(lp, 4.0 / 5.0),
      floor5,
  };
  r.thresholds_ordered =
      std::is_sorted(r.thresholds.rbegin(), r.thresholds.rend());

  r.regime = 5;
  for (int i = 0; i < 5; ++i) {
    if (nd >= r.thresholds[i]) {
      r.regime = i + 1;
      break;
    }
  }

  const double M45 = std::min(std::sqrt(r.K), std::cbrt(r.Q));
  switch (r.regime) {
    case 1: {
      r.bound = pd;
      r.error_term = std::pow(pd, 13.0 / 14.0) * std::pow(lp, 4.0 / 7.0);
      const double eps2 = 1.0 / 7.0 - r.kappa / 7.0;
      r.M = std::floor(std::pow(pd, eps2));
      break;
    }
    case 2: {
      r.bound = pd;
      r.error_term =
          std::pow(pd, 5.0 / 6.0) * std::pow(r.K, 4.0 / 3.0) * std::pow(lp, 4.0 / 3.0);
      // N = p^{1 - eps1}; eps2 = 1/6 - eps1/3 - kappa/3.
      const double eps1 = 1.0 - std::log(nd) / lp;
      const double eps2 = 1.0 / 6.0 - eps1 / 3.0 - r.kappa / 3.0;
      if (eps2 > 0.0) r.M = std::floor(std::pow(pd, eps2));
      break;
    }
    case 3: {
      const double lq = std::log(r.Q);
      r.R = std::cbrt(r.Q) * std::pow(lq, -2.0 / 3.0);
      r.bound = k.c * nd * *r.R;
      break;
    }
    case 4:
      r.bound = k.c * nd * std::sqrt(r.K);
      r.M = M45;
      break;
    default:
      r.bound = k.c * nd * std::cbrt(r.Q);
      r.M = M45;
      break;
  }
  return r;
}

}  // namespace factlab

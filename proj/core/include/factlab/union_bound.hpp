#pragma once

#include <cstdint>
#include <vector>

#include "factlab/residue_set.hpp"

namespace factlab {

/// Parameters of a set family: every member has at least `a` elements, every
/// pairwise intersection at most `b`, and there are `n` members.
struct UnionFamilyStats {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t n = 0;
};

/// (a^2 / b) * (1 - a / (n b)). May be negative (vacuous); returned as is.
/// PreconditionError unless a >= b >= 1 and n >= 2.
double union_lower_bound(const UnionFamilyStats& stats);

struct FamilyReport {
  UnionFamilyStats stats;
  bool applicable = false;  // a >= b >= 1
  double bound = 0.0;       // meaningful only when applicable
  std::uint64_t union_size = 0;
  bool holds = true;        // union_size >= bound (true when inapplicable)
};

/// Measures a, b and the true union of a concrete family and checks the
/// lower bound. PreconditionError for fewer than two sets or an empty set.
FamilyReport verify_family(const std::vector<ResidueSet>& sets);

/// Smallest m with m (m + 1) / 2 >= product_card: a certified lower bound on
/// |A| from |A A| <= C(|A| + 1, 2). PreconditionError for product_card == 0.
std::uint64_t binomial_link(std::uint64_t product_card);

}  // namespace factlab

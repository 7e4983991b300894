#pragma once

#include <utility>
#include <vector>

#include "factlab/census.hpp"
#include "factlab/field.hpp"
#include "factlab/residue_set.hpp"

namespace factlab {

inline constexpr int kMaxFactorials = 7;

/// a = n_1! n_2! ... n_k! (mod p), re-verified when constructed.
class RepresentationCertificate {
 public:
  /// Throws InternalError if the product does not reduce to target, and
  /// PreconditionError if k > 7 or some n_i >= p.
  RepresentationCertificate(const FieldCtx& ctx, Residue target,
                            std::vector<u64> factors);

  Residue target() const noexcept { return target_; }
  const std::vector<u64>& factors() const noexcept { return factors_; }
  /// max n_i (0 when there are no factors).
  u64 bound() const noexcept { return bound_; }

 private:
  Residue target_;
  std::vector<u64> factors_;
  u64 bound_ = 0;
};

/// Product of n! over the given arguments, via one factorial stream.
u64 factorial_product(const FieldCtx& ctx, const std::vector<u64>& ns);

/// Which branch the Wilson construction took.
enum class WilsonBranch { kDirect, kNegated };

struct ThreeFactorial {
  RepresentationCertificate certificate;
  WilsonBranch branch;
};

/// With b = a^{-1}: (b-1)! (p-1-b)! is a or -a. The first case is padded with
/// 1! and the second multiplied by (p-1)! = -1. DomainError for a == 0.
ThreeFactorial three_factorial(const FieldCtx& ctx, Residue a);

/// (y+j, p-1-y), whose factorial product is (y+1)...(y+j) for odd y.
/// PreconditionError for even y or y == 0; RangeError unless y + j < p.
std::pair<u64, u64> wilson_quotient_embed(const FieldCtx& ctx, u64 y, u64 j);

/// Levels S_1..S_k: S_1 = {n! : n <= B}, S_{m+1} = S_m S_1. Since 0! = 1,
/// S_m holds everything reachable with at most m factorials of argument <= B.
/// Stops multiplying once a level covers F_p^* (later levels are copies).
///
/// RangeError unless B < p and 1 <= k <= 7; BudgetError when the
/// multiplications needed exceed budget.
std::vector<ResidueSet> bounded_product_reach(const FieldCtx& ctx, u64 B,
                                              int k,
                                              u64 budget = kDefaultWorkBudget,
                                              unsigned threads = 1);

/// At most k factorials with arguments <= B whose product is a. Picks the
/// smallest argument at each level, so results are deterministic.
/// NotRepresentableError if no such product exists; k = 0 is allowed.
RepresentationCertificate find_representation(
    const FieldCtx& ctx, Residue a, int k, u64 B,
    u64 budget = kDefaultWorkBudget, unsigned threads = 1);

/// Same search against precomputed levels from bounded_product_reach.
RepresentationCertificate find_representation(
    const FieldCtx& ctx, Residue a, u64 B,
    const std::vector<ResidueSet>& levels);

}  // namespace factlab

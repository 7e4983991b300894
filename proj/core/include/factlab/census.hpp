#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "factlab/field.hpp"
#include "factlab/residue_set.hpp"

namespace factlab {

/// Default cap on residue multiplications for product/quotient sets.
inline constexpr u64 kDefaultWorkBudget = u64{1} << 32;

/// {n! mod p : L+1 <= n <= L+N}. Requires N >= 1 and L + N < p.
/// L = 0, N = p-1 gives A(p).
ResidueSet factorial_set(const FieldCtx& ctx, u64 L, u64 N);

/// |A(p)| = |{1!, ..., (p-1)!} mod p| without materializing residues
/// (marks Montgomery representatives, a bijection of F_p).
u64 factorial_residue_count(const FieldCtx& ctx);

struct ErdosRecord {
  u64 p = 0;
  u64 card = 0;  // |A(p)|
  bool ok() const noexcept { return card + 2 < p; }
};

/// |A(p)| for every prime in [p_lo, p_hi], ascending by p.
///
/// Primes are sharded across `threads` workers; each worker interleaves four
/// primes per pass so the dependent multiply chains overlap. on_record, if
/// set, is invoked once per prime as soon as it completes (serialized, in
/// completion order).
std::vector<ErdosRecord> erdos_census(
    u64 p_lo, u64 p_hi, unsigned threads = 1,
    const std::function<void(const ErdosRecord&)>& on_record = {});

/// Primes in [p_lo, p_hi] with |A(p)| >= p - 2. RangeError for p_lo < 7:
/// |A(5)| = 3 = 5 - 2, so the strict inequality is only claimed from 7 on.
std::vector<u64> erdos_scan(u64 p_lo, u64 p_hi, unsigned threads = 1);

/// |{s t mod p}|. BudgetError when |S| |T| > budget.
ResidueSet product_set(const ResidueSet& S, const ResidueSet& T,
                       u64 budget = kDefaultWorkBudget);
u64 product_set_card(const ResidueSet& S, const ResidueSet& T,
                     u64 budget = kDefaultWorkBudget);

/// |{s t^{-1} mod p}|. DomainError when 0 is in T.
u64 quotient_set_card(const ResidueSet& S, const ResidueSet& T,
                      u64 budget = kDefaultWorkBudget);

/// |A(p)| / p and its distance from 1 - 1/e. Reported, never asserted.
struct DensityStats {
  u64 card = 0;
  double ratio = 0.0;
  double deviation = 0.0;
};
DensityStats density_stats(const FieldCtx& ctx);

/// {1!, ..., (2N)!} union {(p-2N)!, ..., (p-1)!}.
ResidueSet wilson_window_set(const FieldCtx& ctx, u64 N);

/// The odd numbers 1, 3, ..., not exceeding 2N - M.
std::vector<u64> odd_window(u64 N, u64 M);

/// Y_j = P_j(odd_window(N, M)) for each j in js.
std::vector<ResidueSet> y_sets(const FieldCtx& ctx, u64 N, u64 M,
                               const std::vector<int>& js);

struct EmbeddingReport {
  bool ok = true;
  u64 checked = 0;   // (j, y) memberships verified
  u64 failures = 0;
};

/// Verifies Y_j is inside A A for every 1 <= j <= M, member by member, with
/// the witness pair ((y+j)!, (p-1-y)!) drawn from wilson_window_set.
/// RangeError unless N >= 1 and 2N + M < p.
EmbeddingReport embedding_report(const FieldCtx& ctx, u64 N, u64 M);
bool embedding_check(const FieldCtx& ctx, u64 N, u64 M);

}  // namespace factlab

#include "factlab/census.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <mutex>
#include <string>
#include <thread>

#include "factlab/constructions.hpp"
#include "factlab/errors.hpp"
#include "factlab/factorial.hpp"
#include "factlab/numeric.hpp"

namespace factlab {

namespace {

// One prime's state inside the interleaved kernel.
struct Lane {
  u64 p;
  u64 ninv;
  u64 one;   // Montgomery 1
  u64 acc;   // Montgomery n!
  u64 step;  // Montgomery n
  u64* bits;
};

inline u64 redc_mul(u64 a, u64 b, u64 p, u64 ninv) noexcept {
  const u128 t = static_cast<u128>(a) * b;
  const u64 m = static_cast<u64>(t) * ninv;
  const u128 u = t + static_cast<u128>(m) * p;
  const u64 r = static_cast<u64>(u >> 64);
  return r >= p ? r - p : r;
}

inline void advance(Lane& l) noexcept {
  l.acc = redc_mul(l.acc, l.step, l.p, l.ninv);
  l.bits[l.acc >> 6] |= u64{1} << (l.acc & 63);
  const u64 s = l.step + l.one;
  l.step = s >= l.p ? s - l.p : s;
}

constexpr std::size_t kLanes = 4;

// Counts |A(p)| for up to kLanes primes at once. scratch is reused between
// calls and must hold kLanes bit sets sized for the largest prime.
void count_batch(const u64* primes, std::size_t n, u64* cards,
                 std::vector<u64>& scratch) {
  u64 pmax = 0;
  for (std::size_t i = 0; i < n; ++i) pmax = std::max(pmax, primes[i]);
  const std::size_t words = static_cast<std::size_t>(pmax / 64 + 1);
  scratch.assign(words * kLanes, 0);

  Lane lanes[kLanes];
  u64 min_len = ~u64{0};
  for (std::size_t i = 0; i < kLanes; ++i) {
    // Idle lanes replay lane 0 into their own scratch; results are dropped.
    const FieldCtx ctx(primes[i < n ? i : 0]);
    lanes[i] = Lane{ctx.modulus(), ctx.mont_neg_inv(), ctx.mont_one(),
                    ctx.mont_one(), ctx.mont_one(), scratch.data() + i * words};
    min_len = std::min(min_len, ctx.modulus() - 1);
  }

  for (u64 k = 0; k < min_len; ++k) {
    advance(lanes[0]);
    advance(lanes[1]);
    advance(lanes[2]);
    advance(lanes[3]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    Lane& l = lanes[i];
    for (u64 k = min_len; k < l.p - 1; ++k) advance(l);
    u64 card = 0;
    for (std::size_t w = 0; w < words; ++w) card += std::popcount(l.bits[w]);
    cards[i] = card;
  }
}

void require_same_modulus(const ResidueSet& S, const ResidueSet& T) {
  if (S.modulus() != T.modulus())
    throw PreconditionError("residue sets have different moduli");
}

}  // namespace

ResidueSet factorial_set(const FieldCtx& ctx, u64 L, u64 N) {
  const u64 p = ctx.modulus();
  if (N < 1 || L >= p || N > p - 1 - L)
    throw RangeError("factorial window needs N >= 1 and L + N <= p - 1 (p=" +
                     std::to_string(p) + ", L=" + std::to_string(L) +
                     ", N=" + std::to_string(N) + ")");
  ResidueSet out(p);
  for (const auto& term : factorial_scan(ctx, L + 1, L + N)) out.insert(term.value);
  return out;
}

u64 factorial_residue_count(const FieldCtx& ctx) {
  const u64 p = ctx.modulus();
  u64 card = 0;
  std::vector<u64> scratch;
  count_batch(&p, 1, &card, scratch);
  return card;
}

std::vector<ErdosRecord> erdos_census(
    u64 p_lo, u64 p_hi, unsigned threads,
    const std::function<void(const ErdosRecord&)>& on_record) {
  if (p_hi >= (u64{1} << 40))
    throw RangeError("erdos census is limited to p < 2^40");
  std::vector<u64> primes = primes_in_range(std::max<u64>(p_lo, 3), p_hi);
  // Largest first so the tail of the schedule is made of cheap batches.
  std::reverse(primes.begin(), primes.end());

  const std::size_t batches = (primes.size() + kLanes - 1) / kLanes;
  std::vector<ErdosRecord> records(primes.size());
  std::atomic<std::size_t> next{0};
  std::mutex sink_mutex;

  auto worker = [&] {
    std::vector<u64> scratch;
    u64 cards[kLanes];
    for (;;) {
      const std::size_t b = next.fetch_add(1, std::memory_order_relaxed);
      if (b >= batches) break;
      const std::size_t first = b * kLanes;
      const std::size_t n = std::min(kLanes, primes.size() - first);
      count_batch(primes.data() + first, n, cards, scratch);
      for (std::size_t i = 0; i < n; ++i) {
        records[first + i] = ErdosRecord{primes[first + i], cards[i]};
        if (on_record) {
          std::lock_guard lock(sink_mutex);
          on_record(records[first + i]);
        }
      }
    }
  };

  threads = std::max(1u, threads);
  if (threads == 1 || batches <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    const unsigned spawn =
        static_cast<unsigned>(std::min<std::size_t>(threads, batches));
    for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
  }
  std::reverse(records.begin(), records.end());
  return records;
}

std::vector<u64> erdos_scan(u64 p_lo, u64 p_hi, unsigned threads) {
  if (p_lo < 7)
    throw RangeError(
        "erdos scan starts at p >= 7: |A(5)| = 3 = p - 2 is a genuine "
        "exception");
  std::vector<u64> bad;
  for (const auto& r : erdos_census(p_lo, p_hi, threads))
    if (!r.ok()) bad.push_back(r.p);
  return bad;
}

ResidueSet product_set(const ResidueSet& S, const ResidueSet& T, u64 budget) {
  require_same_modulus(S, T);
  const u64 p = S.modulus();
  const u128 work = static_cast<u128>(S.size()) * T.size();
  if (work > budget)
    throw BudgetError("product set needs " + std::to_string(static_cast<u64>(
                          std::min<u128>(work, ~u64{0}))) +
                      " multiplications, budget is " + std::to_string(budget));
  ResidueSet out(p);
  if (S.empty() || T.empty()) return out;
  const FieldCtx ctx(p);
  const std::vector<u64> ts = T.elements();
  auto& words = out.words();
  // mont_mul(s R, t) = s t, so one reduction yields the canonical product.
  S.for_each([&](u64 s) {
    const u64 sm = ctx.to_mont(s);
    for (u64 t : ts) {
      const u64 v = ctx.mont_mul(sm, t);
      words[v >> 6] |= u64{1} << (v & 63);
    }
  });
  out.recount();
  return out;
}

u64 product_set_card(const ResidueSet& S, const ResidueSet& T, u64 budget) {
  return product_set(S, T, budget).size();
}

u64 quotient_set_card(const ResidueSet& S, const ResidueSet& T, u64 budget) {
  require_same_modulus(S, T);
  if (T.contains(0)) throw DomainError("quotient set divides by 0");
  const u128 work = static_cast<u128>(S.size()) * T.size();
  if (work > budget)
    throw BudgetError("quotient set exceeds the work budget of " +
                      std::to_string(budget));
  if (T.empty()) return 0;
  const FieldCtx ctx(T.modulus());
  ResidueSet inverses(T.modulus());
  T.for_each([&](u64 t) { inverses.insert(ctx.inv(t)); });
  return product_set(S, inverses, budget).size();
}

DensityStats density_stats(const FieldCtx& ctx) {
  DensityStats s;
  s.card = factorial_residue_count(ctx);
  s.ratio = static_cast<double>(s.card) / static_cast<double>(ctx.modulus());
  s.deviation = s.ratio - (1.0 - std::exp(-1.0));
  return s;
}

ResidueSet wilson_window_set(const FieldCtx& ctx, u64 N) {
  const u64 p = ctx.modulus();
  if (N < 1 || 2 * N >= p)
    throw RangeError("wilson window needs 1 <= N and 2N < p");
  ResidueSet A = factorial_set(ctx, 0, 2 * N);
  A |= factorial_set(ctx, p - 2 * N - 1, 2 * N);
  return A;
}

std::vector<u64> odd_window(u64 N, u64 M) {
  std::vector<u64> out;
  if (2 * N < M) return out;
  for (u64 y = 1; y <= 2 * N - M; y += 2) out.push_back(y);
  return out;
}

std::vector<ResidueSet> y_sets(const FieldCtx& ctx, u64 N, u64 M,
                               const std::vector<int>& js) {
  const std::vector<u64> ys = odd_window(N, M);
  std::vector<u64> vals(ys.size());
  std::vector<ResidueSet> out;
  out.reserve(js.size());
  for (int j : js) {
    const Poly Pj = falling_product_poly(ctx, j);
    std::vector<u64> reduced(ys.size());
    for (std::size_t i = 0; i < ys.size(); ++i) reduced[i] = ctx.reduce(ys[i]);
    Pj.eval_many(ctx, reduced, vals);
    ResidueSet Y(ctx.modulus());
    for (u64 v : vals) Y.insert(v);
    out.push_back(std::move(Y));
  }
  return out;
}

EmbeddingReport embedding_report(const FieldCtx& ctx, u64 N, u64 M) {
  const u64 p = ctx.modulus();
  if (N < 1 || 2 * N + M >= p)
    throw RangeError("embedding check needs N >= 1 and 2N + M < p");
  EmbeddingReport rep;
  if (M == 0) return rep;

  const ResidueSet A = wilson_window_set(ctx, N);
  const FactorialTable fact(ctx);
  const std::vector<u64> ys = odd_window(N, M);
  for (u64 j = 1; j <= M; ++j) {
    const Poly Pj = falling_product_poly(ctx, static_cast<int>(j));
    for (u64 y : ys) {
      const u64 left = fact[y + j];
      const u64 right = fact[p - 1 - y];
      const bool good = A.contains(left) && A.contains(right) &&
                        ctx.mul(left, right) == Pj.eval(ctx, y);
      ++rep.checked;
      if (!good) {
        ++rep.failures;
        rep.ok = false;
      }
    }
  }
  return rep;
}

bool embedding_check(const FieldCtx& ctx, u64 N, u64 M) {
  return embedding_report(ctx, N, M).ok;
}

}  // namespace factlab

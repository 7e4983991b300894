#include "factlab/factorizer.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "factlab/errors.hpp"
#include "factlab/factorial.hpp"

namespace factlab {

u64 factorial_product(const FieldCtx& ctx, const std::vector<u64>& ns) {
  if (ns.empty()) return 1 % ctx.modulus();
  const u64 top = *std::max_element(ns.begin(), ns.end());
  const auto terms = factorial_scan(ctx, 0, top);
  u64 prod = 1;
  for (u64 n : ns) prod = ctx.mul(prod, terms[n].value);
  return prod;
}

RepresentationCertificate::RepresentationCertificate(const FieldCtx& ctx,
                                                     Residue target,
                                                     std::vector<u64> factors)
    : target_(target), factors_(std::move(factors)) {
  if (factors_.size() > static_cast<std::size_t>(kMaxFactorials))
    throw PreconditionError("a certificate holds at most 7 factorials");
  for (u64 n : factors_) {
    if (n >= ctx.modulus())
      throw PreconditionError("factorial argument " + std::to_string(n) +
                              " is not below p");
    bound_ = std::max(bound_, n);
  }
  if (factorial_product(ctx, factors_) != target_.value)
    throw InternalError("factorial product does not match target " +
                        std::to_string(target_.value));
}

ThreeFactorial three_factorial(const FieldCtx& ctx, Residue a) {
  if (a.value >= ctx.modulus())
    throw RangeError("target must be a reduced residue");
  const u64 p = ctx.modulus();
  const u64 b = ctx.inv(a.value);  // DomainError for 0
  const FactorialTable fact(ctx);
  const u64 two = ctx.mul(fact[b - 1], fact[p - 1 - b]);
  if (two == a.value)
    return {RepresentationCertificate(ctx, a, {b - 1, p - 1 - b, 1}),
            WilsonBranch::kDirect};
  return {RepresentationCertificate(ctx, a, {b - 1, p - 1 - b, p - 1}),
          WilsonBranch::kNegated};
}

std::pair<u64, u64> wilson_quotient_embed(const FieldCtx& ctx, u64 y, u64 j) {
  const u64 p = ctx.modulus();
  if (y % 2 == 0)
    throw PreconditionError("wilson embedding needs odd y, got " +
                            std::to_string(y));
  if (y >= p || j >= p - y)
    throw RangeError("wilson embedding needs y + j < p");
  const std::pair<u64, u64> out{y + j, p - 1 - y};
  u64 expected = 1;
  for (u64 i = 1; i <= j; ++i) expected = ctx.mul(expected, ctx.reduce(y + i));
  if (factorial_product(ctx, {out.first, out.second}) != expected)
    throw InternalError("wilson embedding failed to verify");
  return out;
}

namespace {

ResidueSet multiply_level(const FieldCtx& ctx, const ResidueSet& level,
                          const std::vector<u64>& gens, unsigned threads) {
  const u64 p = ctx.modulus();
  const std::vector<u64> src = level.elements();
  std::vector<u64> mont(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) mont[i] = ctx.to_mont(src[i]);

  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::size_t>(threads, 1, gens.size()));
  std::vector<ResidueSet> parts(workers, ResidueSet(p));
  auto run = [&](unsigned w) {
    auto& words = parts[w].words();
    for (std::size_t g = w; g < gens.size(); g += workers) {
      const u64 t = gens[g];
      for (u64 s : mont) {
        const u64 v = ctx.mont_mul(s, t);
        words[v >> 6] |= u64{1} << (v & 63);
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  ResidueSet out = std::move(parts[0]);
  out.recount();
  for (unsigned w = 1; w < workers; ++w) {
    parts[w].recount();
    out |= parts[w];
  }
  return out;
}

}  // namespace

std::vector<ResidueSet> bounded_product_reach(const FieldCtx& ctx, u64 B,
                                              int k, u64 budget,
                                              unsigned threads) {
  const u64 p = ctx.modulus();
  if (B >= p) throw RangeError("factorial bound must be below p");
  if (k < 1 || k > kMaxFactorials)
    throw RangeError("factorial count must be in 1..7");

  ResidueSet first(p);
  for (const auto& term : factorial_scan(ctx, 0, B)) first.insert(term.value);
  const std::vector<u64> gens = first.elements();

  std::vector<ResidueSet> levels{first};
  u64 spent = 0;
  for (int m = 2; m <= k; ++m) {
    const ResidueSet& prev = levels.back();
    if (prev.size() == p - 1) {
      levels.push_back(prev);
      continue;
    }
    const u128 work = static_cast<u128>(prev.size()) * gens.size();
    if (spent + work > budget)
      throw BudgetError("reach level " + std::to_string(m) +
                        " exceeds the work budget of " +
                        std::to_string(budget));
    spent += static_cast<u64>(work);
    levels.push_back(multiply_level(ctx, prev, gens, threads));
  }
  return levels;
}

RepresentationCertificate find_representation(
    const FieldCtx& ctx, Residue a, u64 B,
    const std::vector<ResidueSet>& levels) {
  const u64 p = ctx.modulus();
  if (a.value == 0 || a.value >= p)
    throw RangeError("target must be a nonzero reduced residue");
  const int k = static_cast<int>(levels.size());
  auto in_level = [&](int m, u64 v) {
    return m == 0 ? v == 1 : levels[m - 1].contains(v);
  };
  if (!in_level(k, a.value))
    throw NotRepresentableError(
        std::to_string(a.value) + " is not a product of " + std::to_string(k) +
        " factorials with arguments <= " + std::to_string(B));

  const auto terms = factorial_scan(ctx, 0, B);
  std::vector<u64> inv_fact(terms.size());
  for (std::size_t n = 0; n < terms.size(); ++n)
    inv_fact[n] = ctx.inv(terms[n].value);

  std::vector<u64> factors;
  u64 rest = a.value;
  for (int m = k; m >= 1; --m) {
    bool found = false;
    for (u64 n = 0; n <= B; ++n) {
      const u64 next = ctx.mul(rest, inv_fact[n]);
      if (in_level(m - 1, next)) {
        factors.push_back(n);
        rest = next;
        found = true;
        break;
      }
    }
    if (!found) throw InternalError("level sets are inconsistent");
  }
  return RepresentationCertificate(ctx, a, std::move(factors));
}

RepresentationCertificate find_representation(const FieldCtx& ctx, Residue a,
                                              int k, u64 B, u64 budget,
                                              unsigned threads) {
  if (k < 0 || k > kMaxFactorials)
    throw RangeError("factorial count must be in 0..7");
  if (a.value == 0 || a.value >= ctx.modulus())
    throw RangeError("target must be a nonzero reduced residue");
  if (k == 0) {
    if (a.value != 1)
      throw NotRepresentableError("only 1 is the empty product");
    return RepresentationCertificate(ctx, a, {});
  }
  return find_representation(ctx, a, B,
                             bounded_product_reach(ctx, B, k, budget, threads));
}

}  // namespace factlab

#include "factlab/factorial.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <string>

#include "factlab/errors.hpp"

namespace factlab {
namespace {

void check_range(const FieldCtx& ctx, u64 lo, u64 hi) {
  if (lo > hi) {
    throw RangeError("factorial range is empty: lo=" + std::to_string(lo) +
                     " > hi=" + std::to_string(hi));
  }
  if (hi >= ctx.modulus()) {
    throw RangeError("factorial argument " + std::to_string(hi) +
                     " must be below p=" + std::to_string(ctx.modulus()));
  }
}

u64 parse_u64(std::string_view field, std::string_view line) {
  u64 v = 0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || field.empty()) {
    throw PreconditionError("malformed checkpoint line: '" +
                            std::string(line) + "'");
  }
  return v;
}

}  // namespace

std::string format_checkpoint(const Checkpoint& cp) {
  return std::to_string(cp.p) + "," + std::to_string(cp.n) + "," +
         std::to_string(cp.value);
}

Checkpoint parse_checkpoint(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n' ||
                           line.back() == ' ')) {
    line.remove_suffix(1);
  }
  const auto c1 = line.find(',');
  const auto c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
  if (c2 == std::string_view::npos) {
    throw PreconditionError("malformed checkpoint line: '" +
                            std::string(line) + "'");
  }
  Checkpoint cp;
  cp.p = parse_u64(line.substr(0, c1), line);
  cp.n = parse_u64(line.substr(c1 + 1, c2 - c1 - 1), line);
  cp.value = parse_u64(line.substr(c2 + 1), line);
  return cp;
}

std::optional<Checkpoint> last_checkpoint_for(std::istream& in, u64 p) {
  std::optional<Checkpoint> best;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    const Checkpoint cp = parse_checkpoint(line);
    if (cp.p == p && (!best || cp.n > best->n)) best = cp;
  }
  return best;
}

FactorialScan::FactorialScan(const FieldCtx& ctx, u64 lo, u64 hi,
                             std::optional<Checkpoint> resume)
    : ctx_(&ctx), hi_(hi) {
  check_range(ctx, lo, hi);
  u64 start = 0;
  u64 value = 1;
  if (resume) {
    if (resume->p != ctx.modulus()) {
      throw PreconditionError("checkpoint belongs to p=" +
                              std::to_string(resume->p));
    }
    if (resume->value >= ctx.modulus() || resume->n >= ctx.modulus()) {
      throw PreconditionError("checkpoint is not reduced modulo p");
    }
    if (resume->n <= lo) {
      start = resume->n;
      value = resume->value;
    }
  }
  acc_ = ctx.to_mont(value);
  n_mont_ = ctx.to_mont(start + 1 < ctx.modulus() ? start + 1 : 0);
  n_ = start;
  // Fast-forward silently to lo.
  while (n_ < lo) {
    acc_ = ctx.mont_mul(acc_, n_mont_);
    n_mont_ = ctx.mont_add(n_mont_, ctx.mont_one());
    ++n_;
  }
}

std::optional<FactorialTerm> FactorialScan::next() {
  if (done_) return std::nullopt;
  FactorialTerm term{n_, ctx_->from_mont(acc_)};
  emitted_ = true;
  if (n_ == hi_) {
    done_ = true;
  } else {
    acc_ = ctx_->mont_mul(acc_, n_mont_);
    n_mont_ = ctx_->mont_add(n_mont_, ctx_->mont_one());
    ++n_;
  }
  return term;
}

Checkpoint FactorialScan::checkpoint() const {
  // After the final term, state still describes hi_ itself.
  return Checkpoint{ctx_->modulus(), n_, ctx_->from_mont(acc_)};
}

std::vector<FactorialTerm> factorial_scan(const FieldCtx& ctx, u64 lo, u64 hi,
                                          std::optional<Checkpoint> resume) {
  FactorialScan scan(ctx, lo, hi, resume);
  std::vector<FactorialTerm> out;
  out.reserve(hi - lo + 1);
  while (auto t = scan.next()) out.push_back(*t);
  return out;
}

u64 factorial(const FieldCtx& ctx, u64 n) {
  check_range(ctx, n, n);
  u64 acc = ctx.mont_one();
  u64 k = ctx.mont_one();
  for (u64 i = 1; i <= n; ++i) {
    acc = ctx.mont_mul(acc, k);
    k = ctx.mont_add(k, ctx.mont_one());
  }
  return ctx.from_mont(acc);
}

Residue wilson_pair(const FieldCtx& ctx, u64 y) {
  const u64 p = ctx.modulus();
  if (y >= p) {
    throw RangeError("wilson_pair needs 0 <= y <= p-1, got y=" +
                     std::to_string(y));
  }
  const u64 z = p - 1 - y;
  // One pass: the smaller factorial is a prefix of the larger one.
  const u64 small = std::min(y, z);
  const u64 large = std::max(y, z);
  u64 acc = ctx.mont_one();
  u64 k = ctx.mont_one();
  u64 small_fact = acc;
  for (u64 i = 1; i <= large; ++i) {
    acc = ctx.mont_mul(acc, k);
    k = ctx.mont_add(k, ctx.mont_one());
    if (i == small) small_fact = acc;
  }
  return Residue{ctx.from_mont(ctx.mont_mul(acc, small_fact))};
}

FactorialTable::FactorialTable(const FieldCtx& ctx) : ctx_(ctx) {
  const u64 p = ctx.modulus();
  values_.resize(p);
  u64 acc = ctx.mont_one();
  u64 k = ctx.mont_one();
  values_[0] = 1;
  for (u64 n = 1; n < p; ++n) {
    acc = ctx.mont_mul(acc, k);
    k = ctx.mont_add(k, ctx.mont_one());
    values_[n] = ctx.from_mont(acc);
  }
}

}  // namespace factlab

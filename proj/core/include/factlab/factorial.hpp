#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "factlab/field.hpp"

namespace factlab {

/// One element of a factorial stream: value == n! mod p.
struct FactorialTerm {
  u64 n = 0;
  u64 value = 0;

  friend bool operator==(const FactorialTerm&, const FactorialTerm&) = default;
};

/// A resumable position in a factorial stream; value must equal n! mod p.
/// Serialized as the text triple "p,n,value".
struct Checkpoint {
  u64 p = 0;
  u64 n = 0;
  u64 value = 1;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

std::string format_checkpoint(const Checkpoint& cp);
/// Parses "p,n,value". Throws PreconditionError on malformed input.
Checkpoint parse_checkpoint(std::string_view line);
/// Last checkpoint for modulus p found in a stream of triples, if any.
std::optional<Checkpoint> last_checkpoint_for(std::istream& in, u64 p);

/// Single-consumer stream of (n, n! mod p) for lo <= n <= hi.
///
/// The stream starts from 0! = 1, or from a checkpoint at or below lo, and
/// advances incrementally; Montgomery form is kept internally.
class FactorialScan {
 public:
  FactorialScan(const FieldCtx& ctx, u64 lo, u64 hi,
                std::optional<Checkpoint> resume = std::nullopt);

  /// Next term, or nullopt once hi has been emitted.
  std::optional<FactorialTerm> next();

  /// Checkpoint at the next position to be emitted.
  Checkpoint checkpoint() const;

  u64 remaining() const noexcept { return done_ ? 0 : hi_ - n_ + 1; }

 private:
  const FieldCtx* ctx_;
  u64 hi_;
  u64 n_;        // next n to emit
  u64 acc_;      // mont(n_!)
  u64 n_mont_;   // mont(n_)
  bool done_ = false;
  bool emitted_ = false;
};

/// Collects the whole stream. Throws RangeError unless lo <= hi < p.
std::vector<FactorialTerm> factorial_scan(
    const FieldCtx& ctx, u64 lo, u64 hi,
    std::optional<Checkpoint> resume = std::nullopt);

/// n! mod p for n < p.
u64 factorial(const FieldCtx& ctx, u64 n);

/// y! (p-1-y)! mod p. Equals p-1 for even y and 1 for odd y.
Residue wilson_pair(const FieldCtx& ctx, u64 y);

/// Dense table of n! mod p for every 0 <= n < p.
class FactorialTable {
 public:
  explicit FactorialTable(const FieldCtx& ctx);

  const FieldCtx& ctx() const noexcept { return ctx_; }
  u64 operator[](u64 n) const { return values_.at(n); }
  u64 size() const noexcept { return values_.size(); }

 private:
  FieldCtx ctx_;
  std::vector<u64> values_;
};

}  // namespace factlab

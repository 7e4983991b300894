#pragma once

#include <vector>

#include "factlab/field.hpp"

namespace factlab {

/// Arithmetic progression {start + i*step : 0 <= i < length} in F_p.
struct Progression {
  u64 start = 0;
  u64 step = 1;
  u64 length = 1;

  /// The whole field, {0, 1, ..., p-1}.
  static Progression full(u64 p) { return Progression{0, 1, p}; }
  /// {lo, lo+1, ..., hi}.
  static Progression interval(u64 lo, u64 hi) {
    return Progression{lo, 1, hi - lo + 1};
  }

  friend bool operator==(const Progression&, const Progression&) = default;
};

/// Throws PreconditionError unless step != 0 mod p, start < p and
/// 1 <= length <= p (which makes all elements distinct).
void validate(const FieldCtx& ctx, const Progression& I);

u64 element(const FieldCtx& ctx, const Progression& I, u64 i);
std::vector<u64> elements(const FieldCtx& ctx, const Progression& I);
bool contains(const FieldCtx& ctx, const Progression& I, u64 x);

}  // namespace factlab

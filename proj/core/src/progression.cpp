#include "factlab/progression.hpp"

#include <string>

#include "factlab/errors.hpp"

namespace factlab {

void validate(const FieldCtx& ctx, const Progression& I) {
  const u64 p = ctx.modulus();
  if (I.start >= p) throw PreconditionError("progression start not reduced");
  if (I.step % p == 0) throw PreconditionError("progression step is zero");
  if (I.length < 1 || I.length > p) {
    throw PreconditionError("progression length must lie in [1, p], got " +
                            std::to_string(I.length));
  }
}

u64 element(const FieldCtx& ctx, const Progression& I, u64 i) {
  return ctx.add(I.start, ctx.mul(ctx.reduce(I.step), ctx.reduce(i)));
}

std::vector<u64> elements(const FieldCtx& ctx, const Progression& I) {
  validate(ctx, I);
  std::vector<u64> out(I.length);
  u64 x = I.start;
  const u64 step = ctx.reduce(I.step);
  for (u64 i = 0; i < I.length; ++i) {
    out[i] = x;
    x = ctx.add(x, step);
  }
  return out;
}

bool contains(const FieldCtx& ctx, const Progression& I, u64 x) {
  const u64 index = ctx.mul(ctx.sub(ctx.reduce(x), I.start),
                            ctx.inv(ctx.reduce(I.step)));
  return index < I.length;
}

}  // namespace factlab

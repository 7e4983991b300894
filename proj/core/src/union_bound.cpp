#include "factlab/union_bound.hpp"

#include <algorithm>
#include <cmath>

#include "factlab/errors.hpp"

namespace factlab {

double union_lower_bound(const UnionFamilyStats& s) {
  if (s.b < 1 || s.a < s.b) {
    throw PreconditionError("union bound needs a >= b >= 1");
  }
  if (s.n < 2) throw PreconditionError("union bound needs n >= 2 sets");
  const double a = static_cast<double>(s.a);
  const double b = static_cast<double>(s.b);
  const double n = static_cast<double>(s.n);
  return (a * a / b) * (1.0 - a / (n * b));
}

FamilyReport verify_family(const std::vector<ResidueSet>& sets) {
  if (sets.size() < 2) {
    throw PreconditionError("verify_family needs at least two sets");
  }
  FamilyReport r;
  r.stats.n = sets.size();
  r.stats.a = sets.front().size();
  ResidueSet all(sets.front().modulus());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) throw PreconditionError("verify_family: empty set");
    r.stats.a = std::min(r.stats.a, sets[i].size());
    all |= sets[i];
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      r.stats.b = std::max(r.stats.b, (sets[i] & sets[j]).size());
    }
  }
  r.union_size = all.size();
  r.applicable = r.stats.b >= 1 && r.stats.a >= r.stats.b;
  if (r.applicable) {
    r.bound = union_lower_bound(r.stats);
    r.holds = static_cast<double>(r.union_size) >= r.bound;
  }
  return r;
}

std::uint64_t binomial_link(std::uint64_t product_card) {
  if (product_card == 0) {
    throw PreconditionError("binomial_link needs a positive cardinality");
  }
  // Root of m^2 + m - 2c = 0, then fix up rounding in exact arithmetic.
  const long double c = static_cast<long double>(product_card);
  auto m = static_cast<std::uint64_t>(
      std::ceil((-1.0L + std::sqrt(1.0L + 8.0L * c)) / 2.0L));
  auto tri = [](std::uint64_t k) {
    return static_cast<u128>(k) * (k + 1) / 2;
  };
  while (m > 0 && tri(m - 1) >= product_card) --m;
  while (tri(m) < product_card) ++m;
  return m;
}

}  // namespace factlab

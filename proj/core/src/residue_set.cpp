#include "factlab/residue_set.hpp"

#include <string>

#include "factlab/errors.hpp"

namespace factlab {
namespace {

void check_same(const ResidueSet& a, const ResidueSet& b) {
  if (a.modulus() != b.modulus()) {
    throw PreconditionError("residue sets over different moduli (" +
                            std::to_string(a.modulus()) + " vs " +
                            std::to_string(b.modulus()) + ")");
  }
}

}  // namespace

ResidueSet::ResidueSet(u64 modulus)
    : modulus_(modulus), words_((modulus + 63) / 64, 0) {}

std::vector<u64> ResidueSet::elements() const {
  std::vector<u64> out;
  out.reserve(count_);
  for_each([&](u64 v) { out.push_back(v); });
  return out;
}

bool ResidueSet::is_subset_of(const ResidueSet& other) const {
  check_same(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

ResidueSet& ResidueSet::operator|=(const ResidueSet& other) {
  check_same(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  recount();
  return *this;
}

ResidueSet operator&(const ResidueSet& a, const ResidueSet& b) {
  check_same(a, b);
  ResidueSet out(a.modulus_);
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    out.words_[i] = a.words_[i] & b.words_[i];
  }
  out.recount();
  return out;
}

ResidueSet operator|(const ResidueSet& a, const ResidueSet& b) {
  ResidueSet out = a;
  out |= b;
  return out;
}

void ResidueSet::recount() noexcept {
  u64 c = 0;
  for (u64 w : words_) c += static_cast<u64>(std::popcount(w));
  count_ = c;
}

}  // namespace factlab

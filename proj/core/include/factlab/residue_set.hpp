#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "factlab/field.hpp"

namespace factlab {

/// Dense bit set over {0, ..., p-1} with a cached cardinality.
///
/// Sets built for different moduli never mix: binary operations throw
/// PreconditionError on a modulus mismatch.
class ResidueSet {
 public:
  ResidueSet() = default;
  explicit ResidueSet(u64 modulus);

  u64 modulus() const noexcept { return modulus_; }
  u64 size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool contains(u64 v) const noexcept {
    return v < modulus_ && ((words_[v >> 6] >> (v & 63)) & 1) != 0;
  }
  /// Returns true if v was newly inserted. v must be < modulus().
  bool insert(u64 v) noexcept {
    const u64 bit = u64{1} << (v & 63);
    u64& w = words_[v >> 6];
    if (w & bit) return false;
    w |= bit;
    ++count_;
    return true;
  }

  /// Elements in ascending order.
  std::vector<u64> elements() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      u64 bits = words_[w];
      while (bits != 0) {
        f(static_cast<u64>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  bool is_subset_of(const ResidueSet& other) const;
  ResidueSet& operator|=(const ResidueSet& other);
  friend ResidueSet operator&(const ResidueSet& a, const ResidueSet& b);
  friend ResidueSet operator|(const ResidueSet& a, const ResidueSet& b);
  friend bool operator==(const ResidueSet& a, const ResidueSet& b) noexcept {
    return a.modulus_ == b.modulus_ && a.words_ == b.words_;
  }

  /// Raw word access for bulk kernels; callers must call recount() after.
  std::vector<u64>& words() noexcept { return words_; }
  const std::vector<u64>& words() const noexcept { return words_; }
  void recount() noexcept;

 private:
  u64 modulus_ = 0;
  u64 count_ = 0;
  std::vector<u64> words_;
};

}  // namespace factlab

#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace rrmono {

using Int = long long;

// Dense bit set over [0, nbits).  Bits of the last word beyond nbits are kept
// zero, so whole-word operations stay exact.
struct BitVec {
  std::vector<std::uint64_t> w;
  Int nbits = 0;

  BitVec() = default;
  explicit BitVec(Int n) { resize_bits(n); }

  void resize_bits(Int n) {
    nbits = n;
    w.assign(static_cast<size_t>((n + 63) / 64), 0);
  }

  bool test(Int i) const {
    if (i < 0 || i >= nbits) return false;
    return (w[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1u;
  }

  void set(Int i) {
    assert(i >= 0 && i < nbits);
    w[static_cast<size_t>(i >> 6)] |= std::uint64_t(1) << (i & 63);
  }

  // this |= (src << k).  Requires src.nbits + k <= nbits.
  void or_shifted(const BitVec& src, Int k);

  Int count() const;
  Int next_set_geq(Int from) const;  // least set index >= from, -1 if none
  Int prev_set_leq(Int upto) const;  // greatest set index <= upto, -1 if none
  std::vector<Int> set_bits() const;

  // Set equality: trailing range beyond the shorter vector must be zero.
  friend bool operator==(const BitVec& a, const BitVec& b);
};

}  // namespace rrmono

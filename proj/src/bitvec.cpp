#include "rrmono/bitvec.hpp"

#include <bit>

namespace rrmono {

void BitVec::or_shifted(const BitVec& src, Int k) {
  assert(k >= 0 && src.nbits + k <= nbits);
  const size_t ws = static_cast<size_t>(k >> 6);
  const int bs = static_cast<int>(k & 63);
  const size_t n = src.w.size();
  if (bs == 0) {
    for (size_t i = 0; i < n; ++i) w[i + ws] |= src.w[i];
    return;
  }
  std::uint64_t carry = 0;
  for (size_t i = 0; i < n; ++i) {
    w[i + ws] |= (src.w[i] << bs) | carry;
    carry = src.w[i] >> (64 - bs);
  }
  if (carry) w[n + ws] |= carry;  // in range: src keeps its trailing bits zero
}

Int BitVec::count() const {
  Int c = 0;
  for (std::uint64_t x : w) c += std::popcount(x);
  return c;
}

Int BitVec::next_set_geq(Int from) const {
  if (from < 0) from = 0;
  if (from >= nbits) return -1;
  size_t wi = static_cast<size_t>(from >> 6);
  std::uint64_t cur = w[wi] & (~std::uint64_t(0) << (from & 63));
  while (true) {
    if (cur) return static_cast<Int>(wi << 6) + std::countr_zero(cur);
    if (++wi >= w.size()) return -1;
    cur = w[wi];
  }
}

Int BitVec::prev_set_leq(Int upto) const {
  if (upto >= nbits) upto = nbits - 1;
  if (upto < 0) return -1;
  size_t wi = static_cast<size_t>(upto >> 6);
  const int b = static_cast<int>(upto & 63);
  std::uint64_t cur =
      w[wi] & (b == 63 ? ~std::uint64_t(0) : ((std::uint64_t(1) << (b + 1)) - 1));
  while (true) {
    if (cur) return static_cast<Int>(wi << 6) + 63 - std::countl_zero(cur);
    if (wi == 0) return -1;
    cur = w[--wi];
  }
}

std::vector<Int> BitVec::set_bits() const {
  std::vector<Int> out;
  out.reserve(static_cast<size_t>(count()));
  for (size_t wi = 0; wi < w.size(); ++wi) {
    std::uint64_t cur = w[wi];
    while (cur) {
      out.push_back(static_cast<Int>(wi << 6) + std::countr_zero(cur));
      cur &= cur - 1;
    }
  }
  return out;
}

bool operator==(const BitVec& a, const BitVec& b) {
  const BitVec& s = a.w.size() <= b.w.size() ? a : b;
  const BitVec& l = a.w.size() <= b.w.size() ? b : a;
  size_t i = 0;
  for (; i < s.w.size(); ++i)
    if (s.w[i] != l.w[i]) return false;
  for (; i < l.w.size(); ++i)
    if (l.w[i] != 0) return false;
  return true;
}

}  // namespace rrmono

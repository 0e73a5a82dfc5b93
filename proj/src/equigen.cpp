#include "rrmono/equigen.hpp"

#include <algorithm>
#include <cmath>

#include "rrmono/errors.hpp"
#include "rrmono/regularity.hpp"

namespace rrmono {

GeneratorSet::GeneratorSet(Int d_, std::vector<Int> a) : d(d_), A(std::move(a)) {
  if (d < 1) throw InputError("generator degree d must be positive");
  if (d > 512)
    throw InputError("generator degree too large (limit 512, keeps exponents in range)");
  std::sort(A.begin(), A.end());
  A.erase(std::unique(A.begin(), A.end()), A.end());
  for (Int v : A)
    if (v < 0 || v > d)
      throw InputError("generator exponent " + std::to_string(v) +
                       " outside {0..d}");
  if (A.empty() || A.front() != 0 || A.back() != d)
    throw InputError("not m-primary in scope: generators x^d and y^d are required");
}

SumsetCache::SumsetCache(GeneratorSet E) : E_(std::move(E)) {
  // Keep the dense prefix around 32 MB: sum of row lengths n*d/8 bytes.
  dense_limit_ = std::max<Int>(64, static_cast<Int>(std::sqrt(5.1e8 / double(E_.d))));
  BitVec r0(1);
  r0.set(0);
  rows_.emplace(0, std::move(r0));
  BitVec r1(E_.d + 1);
  for (Int a : E_.A) r1.set(a);
  rows_.emplace(1, std::move(r1));
}

BitVec SumsetCache::fold(const BitVec& cur) const {
  BitVec next(cur.nbits + E_.d);
  for (Int a : E_.A) next.or_shifted(cur, a);
  return next;
}

const BitVec& SumsetCache::row(Int n) {
  if (n < 0) throw InternalCheckError("negative sumset row requested");
  auto hit = rows_.find(n);
  if (hit != rows_.end()) return hit->second;
  auto it = rows_.upper_bound(n);
  --it;  // rows_ always holds row 0
  Int m = it->first;
  BitVec cur = it->second;
  while (m < n) {
    cur = fold(cur);
    ++m;
    if (m < n && m <= dense_limit_) rows_.emplace(m, cur);
  }
  return rows_.emplace(n, std::move(cur)).first->second;
}

std::vector<Int> sumset_power(SumsetCache& cache, Int n) { return cache.set_of(n); }

MonomialIdeal2 ideal_of(const GeneratorSet& E) {
  MonomialIdeal2 out;
  out.gens.reserve(E.A.size());
  for (auto it = E.A.rbegin(); it != E.A.rend(); ++it)
    out.gens.push_back({E.d - *it, *it});
  return out;
}

MonomialIdeal2 power_ideal(SumsetCache& cache, Int n) {
  if (n == 0) return unit_ideal();
  const Int nd = n * cache.gen_set().d;
  std::vector<Int> cs = cache.set_of(n);
  MonomialIdeal2 out;
  out.gens.reserve(cs.size());
  for (auto it = cs.rbegin(); it != cs.rend(); ++it)
    out.gens.push_back({nd - *it, *it});
  return out;  // distinct degree-nd monomials are automatically an antichain
}

bool member(SumsetCache& cache, Int n, const Monomial2& m) {
  if (m.i < 0 || m.j < 0) return false;
  if (n == 0) return true;
  const Int nd = n * cache.gen_set().d;
  // x^(nd-c) y^c divides x^i y^j iff nd-i <= c <= j, clamped to [0, nd].
  const Int lo = std::max(nd - m.i, Int(0));
  const Int hi = std::min(m.j, nd);
  if (lo > hi) return false;
  const Int c = cache.row(n).next_set_geq(lo);
  return c >= 0 && c <= hi;
}

Int reduction_number(SumsetCache& cache) {
  const Int d = cache.gen_set().d;
  const Int cap = safe_cap(d);
  for (Int n = 0; n <= cap; ++n) {
    // I^(n+1) = (x^d, y^d) I^n in the same degree iff (n+1)A = nA u (nA + d).
    const BitVec& cur = cache.row(n);
    BitVec both(cur.nbits + d);
    both.or_shifted(cur, 0);
    both.or_shifted(cur, d);
    if (both == cache.row(n + 1)) return n;
  }
  throw InternalCheckError("reduction number scan exceeded the proven cap");
}

}  // namespace rrmono

#include "rrmono/ratliff_rush.hpp"

#include <algorithm>

#include "rrmono/errors.hpp"

namespace rrmono {

MonomialIdeal2 chain_colon(SumsetCache& cache, Int n, Int t) {
  if (n < 0 || t < 0) throw InternalCheckError("chain_colon index out of range");
  if (t == 0) return power_ideal(cache, n);
  const Int d = cache.gen_set().d;
  const BitVec& S = cache.row(n + t);
  const Int nd = n * d, td = t * d, N = (n + t) * d;

  // Colon by x^(td): generator (N-c, c) maps to (max(nd-c,0), c).  All c >= nd
  // collapse onto the x-axis, where only the least such c survives.
  std::vector<Monomial2> xg;
  xg.push_back({0, S.next_set_geq(nd)});  // exists: N is always in S
  for (Int c = S.prev_set_leq(nd - 1); c >= 0; c = S.prev_set_leq(c - 1))
    xg.push_back({nd - c, c});

  // Colon by y^(td): (N-c, c) maps to (N-c, max(c-td,0)); all c <= td collapse
  // onto the y-axis=0 line, where only the greatest such c survives.
  std::vector<Monomial2> yg;
  for (Int c = S.next_set_geq(td + 1); c >= 0; c = S.next_set_geq(c + 1))
    yg.push_back({N - c, c - td});
  std::reverse(yg.begin(), yg.end());
  yg.push_back({N - S.prev_set_leq(td), 0});  // exists: 0 is always in S

  return intersect(MonomialIdeal2{std::move(xg)}, MonomialIdeal2{std::move(yg)});
}

RRFiltrationEntry rr_closure(SumsetCache& cache, Int n, Int regR) {
  const Int t = std::max(regR - n, Int(0));
  MonomialIdeal2 cl = chain_colon(cache, n, t);
  const bool stab = (chain_colon(cache, n, t + 1) == cl);
  if (!stab)
    throw InternalCheckError("closure chain not stable at n=" + std::to_string(n) +
                             ", t=" + std::to_string(t));
  return {n, std::move(cl), t, true};
}

std::vector<Int> initial_piece(SumsetCache& cache, Int n, Int regR) {
  const MonomialIdeal2 cl = rr_closure(cache, n, regR).closure;
  const Int nd = n * cache.gen_set().d;
  std::vector<Int> out;
  for (Int c = 0; c <= nd; ++c)
    if (contains(cl, {nd - c, c})) out.push_back(c);
  return out;
}

RRIndices rr_indices(SumsetCache& cache, Int regR, Int regF) {
  RRIndices ix;

  // Downward scans: the first failure met from the top is the largest failing
  // n, so the index is that n plus one.  Theory pins equality at each top.
  const Int top = std::max(regR, Int(1));
  ix.s_star = 1;
  for (Int n = top; n >= 1; --n) {
    if (rr_closure(cache, n, regR).closure == power_ideal(cache, n)) continue;
    if (n == top)
      throw InternalCheckError("s* exceeds max(reg R, 1)");
    ix.s_star = n + 1;
    break;
  }

  const Int topf = std::max(regF, Int(1));
  ix.s_ini = 1;
  for (Int n = topf; n >= 1; --n) {
    if (initial_piece(cache, n, regR) == cache.set_of(n)) continue;
    if (n == topf)
      throw InternalCheckError("s*_ini exceeds max(reg F, 1)");
    ix.s_ini = n + 1;
    break;
  }

  const MonomialIdeal2 rr1 = rr_closure(cache, 1, regR).closure;
  const Int tops = std::max(regR - 1, Int(0));
  ix.s = 0;
  for (Int n = tops; n >= 0; --n) {
    if (colon_ideal(power_ideal(cache, n + 1), power_ideal(cache, n)) == rr1)
      continue;
    if (n == tops)
      throw InternalCheckError("s exceeds max(reg R - 1, 0)");
    ix.s = n + 1;
    break;
  }

  if (ix.s_ini > ix.s_star)
    throw InternalCheckError("s*_ini exceeded s*");
  return ix;
}

}  // namespace rrmono

#include "rrmono/semigroup.hpp"

#include "rrmono/errors.hpp"

namespace rrmono {

std::vector<Int> h1_dimensions(SumsetCache& cache, Int regR_or_cap, Int s_ini) {
  std::vector<Int> h1;
  for (Int n = 1; n < s_ini; ++n) {
    const BitVec& nA = cache.row(n);
    Int extra = 0;
    for (Int c : initial_piece(cache, n, regR_or_cap))
      if (!nA.test(c)) ++extra;
    h1.push_back(extra);
  }
  return h1;
}

SemigroupProfile classify_with(SumsetCache& cache, Int regR, Int /*regF*/, Int s_ini) {
  SemigroupProfile P{cache.gen_set(), s_ini, {}, true, true};
  P.h1 = h1_dimensions(cache, regR, s_ini);
  P.is_cm = (s_ini == 1);
  // Buchsbaum means adding any semigroup element lands the extra degree-n
  // points back inside: one generation step suffices, because pushing by one
  // copy of A at a time inductively covers every longer product.
  for (Int n = 1; n < s_ini && P.is_buchsbaum; ++n) {
    const BitVec& nA = cache.row(n);
    const BitVec& n1A = cache.row(n + 1);
    for (Int c : initial_piece(cache, n, regR)) {
      if (nA.test(c)) continue;
      for (Int a : P.E.A)
        if (!n1A.test(c + a)) {
          P.is_buchsbaum = false;
          break;
        }
      if (!P.is_buchsbaum) break;
    }
  }
  if (P.is_cm && !P.is_buchsbaum)
    throw InternalCheckError("Cohen-Macaulay profile failed the Buchsbaum test");
  return P;
}

SemigroupProfile classify(SumsetCache& cache) {
  const Int regR = reg_rees(cache);
  const Int regF = reg_fiber_with(cache, regR);
  const RRIndices ix = rr_indices(cache, regR, regF);
  return classify_with(cache, regR, regF, ix.s_ini);
}

}  // namespace rrmono

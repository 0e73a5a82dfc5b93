#include "rrmono/regularity.hpp"

#include <algorithm>
#include <numeric>

#include "rrmono/errors.hpp"

namespace rrmono {

const char* to_string(EuClass c) {
  switch (c) {
    case EuClass::Parameter: return "parameter";
    case EuClass::MiddleClass: return "middle";
    case EuClass::NeighborClass: return "neighbor";
    case EuClass::ThreeGenerator: return "three-generator";
    case EuClass::General: return "general";
  }
  return "?";
}

Int safe_cap(Int d) {
  const Int e = d * d;
  return std::max(e * e - e, Int(1));
}

Int reg_rees(SumsetCache& cache) {
  const GeneratorSet& E = cache.gen_set();
  if (E.is_parameter()) return 0;
  const Int cap = safe_cap(E.d);
  for (Int n = reduction_number(cache); n <= cap; ++n)
    if (chain_colon(cache, n, 1) == power_ideal(cache, n)) return n;
  throw InternalCheckError("reg R scan exceeded the proven cap");
}

Int reg_rees_via_rr(SumsetCache& cache) {
  const Int cap = safe_cap(cache.gen_set().d);
  Int got = -1;
  for (Int n = reduction_number(cache); n <= cap; ++n)
    if (rr_closure(cache, n, cap).closure == power_ideal(cache, n)) {
      got = n;
      break;
    }
  if (got < 0) throw InternalCheckError("closure-based reg R scan exceeded the cap");
  if (got != reg_rees(cache))
    throw InternalCheckError("reg R cross-check mismatch (closure scan gave " +
                             std::to_string(got) + ")");
  return got;
}

Int reg_rees_alternative(SumsetCache& cache) {
  const Int cap = safe_cap(cache.gen_set().d);
  const Int r = reduction_number(cache);
  Int got = -1;
  if (r == 0) {
    got = 0;  // parameter ideal: the scan starts and succeeds at n = r = 0
  } else {
    const MonomialIdeal2 rr_r = rr_closure(cache, r, cap).closure;
    for (Int n = r; n <= cap; ++n)
      if (colon_ideal(power_ideal(cache, n), power_ideal(cache, n - r)) == rr_r) {
        got = n;
        break;
      }
    if (got < 0)
      throw InternalCheckError("alternative reg R scan exceeded the cap");
  }
  if (got != reg_rees(cache))
    throw InternalCheckError("reg R cross-check mismatch (alternative scan gave " +
                             std::to_string(got) + ")");
  return got;
}

Int reg_fiber_with(SumsetCache& cache, Int regR) {
  const GeneratorSet& E = cache.gen_set();
  if (E.is_parameter()) return 0;
  const Int cap = safe_cap(E.d);
  for (Int n = reduction_number(cache); n <= cap; ++n)
    if (initial_piece(cache, n, regR) == cache.set_of(n)) return n;
  throw InternalCheckError("reg F scan exceeded the proven cap");
}

Int reg_fiber(SumsetCache& cache) {
  return reg_fiber_with(cache, reg_rees(cache));
}

std::vector<EuClass> classify_shapes(const GeneratorSet& E) {
  std::vector<EuClass> out;
  if (E.is_parameter()) out.push_back(EuClass::Parameter);
  if (E.A.size() > 2) {
    // middle class: the interior exponents form one contiguous block
    bool contiguous = true;
    for (size_t k = 2; k + 1 < E.A.size(); ++k)
      if (E.A[k] != E.A[k - 1] + 1) contiguous = false;
    if (contiguous) out.push_back(EuClass::MiddleClass);
    if (E.d > 1 && std::binary_search(E.A.begin(), E.A.end(), Int(1)))
      out.push_back(EuClass::NeighborClass);
    if (E.A.size() == 3) out.push_back(EuClass::ThreeGenerator);
  }
  if (out.empty()) out.push_back(EuClass::General);
  return out;
}

RegularityResult eu_verdict(SumsetCache& cache) {
  const GeneratorSet& E = cache.gen_set();
  RegularityResult R;
  R.r_J = reduction_number(cache);
  R.regR = reg_rees(cache);
  R.regF = reg_fiber_with(cache, R.regR);
  R.e = E.d * E.d;
  const RRIndices ix = rr_indices(cache, R.regR, R.regF);
  R.s_star = ix.s_star;
  R.eu_equal = (R.regR == R.regF);
  R.classes = classify_shapes(E);
  R.eu_class = R.classes.front();
  R.invariance = (ix.s_star < R.r_J);
  if (!(R.r_J <= R.regF && R.regF <= R.regR && R.regR <= safe_cap(E.d)))
    throw InternalCheckError("regularity inequality chain violated");
  return R;
}

}  // namespace rrmono

#include "rrmono/analysis.hpp"

#include <algorithm>

#include "rrmono/errors.hpp"

namespace rrmono {

AnalysisReport analyze(const GeneratorSet& E, const AnalyzeOptions& opt) {
  SumsetCache cache(E);
  AnalysisReport R;
  R.d = E.d;
  R.A = E.A;
  R.r_J = reduction_number(cache);
  R.regR = reg_rees(cache);
  R.regF = reg_fiber_with(cache, R.regR);
  R.e = E.d * E.d;
  const RRIndices ix = rr_indices(cache, R.regR, R.regF);
  R.s = ix.s;
  R.s_star = ix.s_star;
  R.s_ini = ix.s_ini;
  R.eu_equal = (R.regR == R.regF);
  R.classes = classify_shapes(E);
  R.eu_class = R.classes.front();
  R.invariance = (ix.s_star < R.r_J);
  const SemigroupProfile P = classify_with(cache, R.regR, R.regF, ix.s_ini);
  R.is_cm = P.is_cm;
  R.is_buchsbaum = P.is_buchsbaum;
  R.h1 = P.h1;
  for (Int n = 1; n <= opt.max_n; ++n) {
    RRFiltrationEntry entry = rr_closure(cache, n, R.regR);
    R.rr_generators.push_back({n, entry.t_used, std::move(entry.closure.gens)});
  }
  assert_report_invariants(R);
  return R;
}

void assert_report_invariants(const AnalysisReport& R) {
  auto demand = [](bool ok, const char* what) {
    if (!ok) throw InternalCheckError(std::string("report invariant violated: ") + what);
  };
  demand(R.e == R.d * R.d, "e = d^2");
  demand(R.r_J <= R.regF && R.regF <= R.regR && R.regR <= safe_cap(R.d),
         "r_J <= reg F <= reg R <= cap");
  const bool param = (R.A.size() == 2);
  if (param) {
    demand(R.r_J == 0 && R.regR == 0 && R.regF == 0, "parameter ideal regularities vanish");
    demand(R.s == 0 && R.s_star == 1 && R.s_ini == 1, "parameter ideal closure indices");
    demand(R.is_cm && R.is_buchsbaum, "parameter ideal fiber ring is a polynomial ring");
  } else {
    demand(R.regR == std::max(R.r_J, R.s_star), "reg R = max(r_J, s*)");
    demand(R.regF == std::max(R.r_J, R.s_ini), "reg F = max(r_J, s*_ini)");
  }
  demand(R.s <= std::max(R.regR - 1, Int(0)), "s <= max(reg R - 1, 0)");
  demand(R.s_ini <= R.s_star && R.s_star <= std::max(R.regR, Int(1)),
         "s*_ini <= s* <= max(reg R, 1)");
  demand(static_cast<Int>(R.h1.size()) == std::max(R.s_ini - 1, Int(0)),
         "h1 length is s*_ini - 1");
  bool all_zero = true;
  for (Int v : R.h1) {
    demand(v >= 0, "h1 entries are dimensions");
    if (v != 0) all_zero = false;
  }
  demand(R.is_cm == all_zero, "Cohen-Macaulay exactly when H^1 vanishes");
  demand(R.is_cm == (R.s_ini == 1), "Cohen-Macaulay exactly when s*_ini = 1");
  demand(!R.is_cm || R.is_buchsbaum, "Cohen-Macaulay implies Buchsbaum");
  demand(R.eu_equal == (R.regR == R.regF), "eu_equal mirrors reg R = reg F");
  demand(R.invariance == (R.s_star < R.r_J), "invariance trigger is s* < r_J");
  demand(!R.classes.empty() && R.classes.front() == R.eu_class,
         "eu_class is the most specific recorded class");
}

}  // namespace rrmono

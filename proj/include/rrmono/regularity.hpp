#pragma once

#include "rrmono/ratliff_rush.hpp"

namespace rrmono {

enum class EuClass { Parameter, MiddleClass, NeighborClass, ThreeGenerator, General };
const char* to_string(EuClass c);

struct RegularityResult {
  Int r_J = 0;
  Int regR = 0;  // Castelnuovo-Mumford regularity of the Rees algebra
  Int regF = 0;  // regularity of the fiber ring
  Int e = 0;     // multiplicity, d^2 in two variables
  bool eu_equal = false;          // regR == regF
  EuClass eu_class = EuClass::General;
  std::vector<EuClass> classes;   // every matching class, most specific first
  bool invariance = false;        // s* < r_J: reduction number is reduction-independent
  Int s_star = 1;
};

// Proven upper bound for reg R: max(e^2 - e, 1) with e = d^2.  Loop guard only;
// the scans below always stop far earlier on valid inputs.
Int safe_cap(Int d);

// Least n >= r_J with I^(n+1) : (x^d, y^d) = I^n, i.e. the first point where
// the closure chain is already flat after one step.  Parameter ideals are 0.
Int reg_rees(SumsetCache& cache);

// Independent cross-checks; both use the hard cap instead of reg_rees' output
// and throw if they disagree with it.
Int reg_rees_via_rr(SumsetCache& cache);       // least n >= r_J with closure(I^n) = I^n
Int reg_rees_alternative(SumsetCache& cache);  // least n >= r with closure(I^r) = I^n : I^(n-r)

Int reg_fiber(SumsetCache& cache);
Int reg_fiber_with(SumsetCache& cache, Int regR);

std::vector<EuClass> classify_shapes(const GeneratorSet& E);
RegularityResult eu_verdict(SumsetCache& cache);

}  // namespace rrmono

#pragma once

#include "rrmono/regularity.hpp"

namespace rrmono {

// Fiber ring seen as the semigroup ring of the additive monoid generated by A
// (graded by the number of summands).  h1 lists the graded dimensions of the
// first local cohomology: entry k is the dimension in degree n = k + 1, and
// the list stops at n = s_ini - 1 because every later piece vanishes.
struct SemigroupProfile {
  GeneratorSet E;
  Int s_ini = 1;
  std::vector<Int> h1;
  bool is_cm = true;
  bool is_buchsbaum = true;
};

std::vector<Int> h1_dimensions(SumsetCache& cache, Int regR_or_cap, Int s_ini);
SemigroupProfile classify(SumsetCache& cache);
SemigroupProfile classify_with(SumsetCache& cache, Int regR, Int regF, Int s_ini);

}  // namespace rrmono

#pragma once

#include "rrmono/equigen.hpp"

namespace rrmono {

struct RRFiltrationEntry {
  Int n = 1;
  MonomialIdeal2 closure;  // the Ratliff-Rush closure of I^n
  Int t_used = 0;          // chain index the colon was evaluated at
  bool stabilized = false; // chain value equal at t_used and t_used + 1
};

struct RRIndices {
  Int s = 0;       // least m >= 0 with I^(n+1) : I^n equal to the closure of I, all n >= m
  Int s_star = 1;  // least m >= 1 with closure(I^n) = I^n for all n >= m
  Int s_ini = 1;   // least m >= 1 with the degree-nd pieces equal for all n >= m
};

// I^(n+t) : (x^(td), y^(td)) -- the ascending chain whose union is the closure.
MonomialIdeal2 chain_colon(SumsetCache& cache, Int n, Int t);

// Closure of I^n evaluated at the single proven-stable chain index
// t = max(regR - n, 0); also probes t + 1 and demands equality.
RRFiltrationEntry rr_closure(SumsetCache& cache, Int n, Int regR);

// y-exponents c with x^(nd-c) y^c in the degree-nd piece of the closure.
std::vector<Int> initial_piece(SumsetCache& cache, Int n, Int regR);

RRIndices rr_indices(SumsetCache& cache, Int regR, Int regF);

}  // namespace rrmono

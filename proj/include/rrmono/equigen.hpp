#pragma once

#include <map>
#include <vector>

#include "rrmono/monomial_ideal.hpp"

namespace rrmono {

// An m-primary monomial ideal generated in one degree d, encoded by its set A
// of y-exponents: a in A stands for the generator x^(d-a) y^a.  Requiring
// 0 and d in A is exactly requiring x^d and y^d among the generators.
struct GeneratorSet {
  Int d = 1;
  std::vector<Int> A;  // sorted ascending, deduplicated, 0 and d present

  GeneratorSet(Int d_, std::vector<Int> a);

  bool is_parameter() const { return A.size() == 2; }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;
};

// Memoized sumset rows: row(n) holds the bits of nA over [0, nd].  Rows up to
// a size-bounded dense limit are all kept (every downstream computation
// re-reads the small ones); a row requested above the limit is computed by
// rolling forward from the nearest cached row and only that row is kept, so
// one huge row (the hard-cap checks need exactly one) costs no extra memory.
class SumsetCache {
 public:
  explicit SumsetCache(GeneratorSet E);

  const GeneratorSet& gen_set() const { return E_; }
  const BitVec& row(Int n);
  std::vector<Int> set_of(Int n) { return row(n).set_bits(); }
  bool has(Int n, Int c) { return row(n).test(c); }

 private:
  GeneratorSet E_;
  Int dense_limit_;
  std::map<Int, BitVec> rows_;

  BitVec fold(const BitVec& cur) const;  // nA -> (n+1)A
};

std::vector<Int> sumset_power(SumsetCache& cache, Int n);
MonomialIdeal2 ideal_of(const GeneratorSet& E);
MonomialIdeal2 power_ideal(SumsetCache& cache, Int n);  // I^n from the sumset row
bool member(SumsetCache& cache, Int n, const Monomial2& m);  // x^i y^j in I^n?
Int reduction_number(SumsetCache& cache);  // r_J for J = (x^d, y^d)

}  // namespace rrmono

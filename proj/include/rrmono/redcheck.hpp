#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rrmono/regularity.hpp"

namespace rrmono {

// Degree-d form sum of q_a x^(d-a) y^a, keyed by the y-exponent a.
struct HomogeneousForm2 {
  Int d = 1;
  std::map<Int, mpq_class> coeffs;  // nonzero coefficients only

  friend bool operator==(const HomogeneousForm2&, const HomogeneousForm2&) = default;
};

// Subspace of the degree-`degree` graded piece, basis x^(degree-a) y^a for
// a = 0..degree.  Rows are kept in reduced row-echelon form.
struct GradedSubspace {
  Int degree = 0;
  std::vector<std::vector<mpq_class>> rows;
  std::vector<Int> pivots;  // strictly increasing, parallel to rows

  explicit GradedSubspace(Int deg) : degree(deg) {}
  bool insert(std::vector<mpq_class> v);  // true iff the span grew
  Int rank() const { return static_cast<Int>(rows.size()); }
};

// Same elimination over the prime field F_p for the fast sampling mode.
struct ModSubspace {
  std::uint64_t p;
  Int degree;
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<Int> pivots;

  ModSubspace(std::uint64_t p_, Int deg) : p(p_), degree(deg) {}
  bool insert(std::vector<std::uint64_t> v);
  Int rank() const { return static_cast<Int>(rows.size()); }
};

struct FieldMode {
  std::uint64_t p = 0;  // 0 = exact rationals, else the prime
};

// System-of-parameters test: the two degree-d forms share no projective root,
// decided by the rank of the 2d x 2d Sylvester block over the rationals.
bool sylvester_nondegenerate(const HomogeneousForm2& f, const HomogeneousForm2& g);

bool is_reduction_at(SumsetCache& cache, const HomogeneousForm2& f,
                     const HomogeneousForm2& g, Int n, FieldMode mode = {});

// Least n <= cap with is_reduction_at; nullopt when none qualifies.
std::optional<Int> reduction_number_of(SumsetCache& cache, const HomogeneousForm2& f,
                                       const HomogeneousForm2& g, Int cap,
                                       FieldMode mode = {});

struct ReductionSample {
  Int trials_done = 0;
  Int rejected = 0;  // degenerate draws discarded and redrawn
  std::map<Int, Int> histogram;
  Int min_r = -1;
  Int max_r = -1;
  Int s_star = 1;
  bool conjecture_flag = false;  // max_r < s*: needs exhaustive verification
};

// Seeded random reduction pairs with coefficients in [-3, 3] over the
// generator support.  Trial 0 is always the pair (x^d, y^d): it is a minimal
// reduction realizing the largest reduction number, so the histogram is
// guaranteed to contain it whatever the seed.
ReductionSample sample_reductions(SumsetCache& cache, Int trials, std::uint64_t seed,
                                  FieldMode mode = {});

}  // namespace rrmono

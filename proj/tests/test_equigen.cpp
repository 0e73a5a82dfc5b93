#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "rrmono/equigen.hpp"
#include "rrmono/errors.hpp"

using namespace rrmono;
using rrmono::testing::gs;
using rrmono::testing::pairs;

TEST_CASE("GeneratorSet validates its data") {
  GeneratorSet E(7, {7, 0, 1, 5, 5});  // unsorted, duplicated
  CHECK(E.d == 7);
  CHECK(E.A == std::vector<Int>{0, 1, 5, 7});
  CHECK_FALSE(E.is_parameter());
  CHECK(gs(3, {0, 3}).is_parameter());

  CHECK_THROWS_WITH_AS(GeneratorSet(0, {0}), "generator degree d must be positive",
                       InputError);
  CHECK_THROWS_WITH_AS(GeneratorSet(600, {0, 600}),
                       "generator degree too large (limit 512, keeps exponents in range)",
                       InputError);
  CHECK_THROWS_AS(GeneratorSet(5, {0, 7, 5}), InputError);
  CHECK_THROWS_AS(GeneratorSet(5, {0, -1, 5}), InputError);
  CHECK_THROWS_WITH_AS(GeneratorSet(5, {0, 2}),
                       "not m-primary in scope: generators x^d and y^d are required",
                       InputError);
  CHECK_THROWS_AS(GeneratorSet(5, {2, 5}), InputError);
}

TEST_CASE("sumset powers") {
  SumsetCache huck(gs(7, {0, 1, 5, 7}));
  CHECK(sumset_power(huck, 0) == std::vector<Int>{0});
  CHECK(sumset_power(huck, 1) == huck.gen_set().A);
  CHECK(sumset_power(huck, 2) ==
        std::vector<Int>{0, 1, 2, 5, 6, 7, 8, 10, 12, 14});

  SumsetCache par(gs(4, {0, 4}));
  CHECK(sumset_power(par, 3) == std::vector<Int>{0, 4, 8, 12});

  CHECK(huck.set_of(2) == sumset_power(huck, 2));
  CHECK(huck.row(2).count() == 10);
  CHECK(huck.has(2, 10));
  CHECK_FALSE(huck.has(2, 3));
}

TEST_CASE("ideal_of lists the staircase generators of I") {
  MonomialIdeal2 I = ideal_of(gs(7, {0, 1, 5, 7}));
  CHECK(pairs(I) ==
        std::vector<std::pair<Int, Int>>{{0, 7}, {2, 5}, {6, 1}, {7, 0}});

  SumsetCache cache(gs(7, {0, 1, 5, 7}));
  CHECK(power_ideal(cache, 1) == I);
  CHECK(power_ideal(cache, 0) == unit_ideal());
  CHECK(power_ideal(cache, 3) == power(I, 3));
}

TEST_CASE("member mirrors staircase membership") {
  SumsetCache cache(gs(7, {0, 1, 5, 7}));
  // x^7 y^3 = x^6 y * x y^2? No: membership in I itself.
  CHECK(member(cache, 1, {7, 3}));
  CHECK_FALSE(member(cache, 1, {3, 4}));
  CHECK(member(cache, 2, {14, 14}));
  CHECK(member(cache, 0, {0, 0}));
  CHECK_FALSE(member(cache, 2, {6, 6}));

  MonomialIdeal2 I2 = power(ideal_of(cache.gen_set()), 2);
  for (Int i = 0; i <= 21; ++i)
    for (Int j = 0; j <= 21; ++j)
      CHECK(member(cache, 2, {i, j}) == contains(I2, {i, j}));
}

TEST_CASE("reduction numbers from sumsets") {
  SumsetCache huck(gs(7, {0, 1, 5, 7}));
  CHECK(reduction_number(huck) == 4);

  SumsetCache par(gs(9, {0, 9}));
  CHECK(reduction_number(par) == 0);

  SumsetCache full(gs(5, {0, 1, 2, 3, 4, 5}));
  CHECK(reduction_number(full) == 1);

  // The degree-17 example: 12 = 5+5+1+1 lies in 4A but not in 3A, and 3A+17
  // only reaches values >= 17, so (x^17, y^17)*I^3 != I^4 and the reduction
  // number is 4.
  SumsetCache deg17(gs(17, {0, 1, 3, 5, 13, 14, 16, 17}));
  CHECK(reduction_number(deg17) == 4);
  CHECK(deg17.has(4, 12));
  CHECK_FALSE(deg17.has(3, 12));
}

TEST_CASE("sumset row equals OR of shifted previous row") {
  GeneratorSet E = gs(6, {0, 2, 3, 6});
  SumsetCache cache(E);
  for (Int n = 1; n <= 5; ++n) {
    BitVec expect;
    expect.resize_bits((n + 1) * E.d + 1);
    for (Int a : E.A) expect.or_shifted(cache.row(n), a);
    CHECK(expect == cache.row(n + 1));
  }
}

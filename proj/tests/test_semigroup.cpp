#include <doctest.h>

#include "helpers.hpp"
#include "rrmono/analysis.hpp"
#include "rrmono/semigroup.hpp"

using namespace rrmono;
using rrmono::testing::gs;

TEST_CASE("Huckaba semigroup profile") {
  SumsetCache huck(gs(7, {0, 1, 5, 7}));
  SemigroupProfile P = classify(huck);
  CHECK(P.s_ini == 4);
  CHECK(P.h1 == std::vector<Int>{1, 2, 1});
  CHECK_FALSE(P.is_cm);
  CHECK_FALSE(P.is_buchsbaum);
}

TEST_CASE("degree-17 semigroup profile") {
  SumsetCache deg17(gs(17, {0, 1, 3, 5, 13, 14, 16, 17}));
  SemigroupProfile P = classify(deg17);
  CHECK(P.s_ini == 4);
  CHECK(P.h1 == std::vector<Int>{10, 7, 1});
  CHECK_FALSE(P.is_cm);
  CHECK_FALSE(P.is_buchsbaum);
  // entry k holds the dimension in degree k + 1, so the degree-3 piece is
  // h1[2] and it is the last nonzero one
  CHECK(P.h1[2] == 1);
}

TEST_CASE("Cohen-Macaulay cases have empty h1") {
  for (auto E : {gs(4, {0, 4}), gs(6, {0, 2, 3, 4, 6}), gs(2, {0, 1, 2}),
                 gs(10, {0, 3, 4, 5, 6, 7, 10})}) {
    CAPTURE(E.d);
    SumsetCache cache(E);
    SemigroupProfile P = classify(cache);
    CHECK(P.s_ini == 1);
    CHECK(P.h1.empty());
    CHECK(P.is_cm);
    CHECK(P.is_buchsbaum);
  }
}

TEST_CASE("golden degree-5 profiles") {
  SumsetCache a(gs(5, {0, 1, 4, 5}));
  SemigroupProfile Pa = classify(a);
  CHECK(Pa.h1 == std::vector<Int>{2, 2});
  CHECK_FALSE(Pa.is_cm);
  CHECK_FALSE(Pa.is_buchsbaum);

  SumsetCache b(gs(5, {0, 1, 2, 4, 5}));
  SemigroupProfile Pb = classify(b);
  CHECK(Pb.h1 == std::vector<Int>{1});
  CHECK_FALSE(Pb.is_cm);
  CHECK(Pb.is_buchsbaum);

  SumsetCache c(gs(5, {0, 1, 3, 4, 5}));
  SemigroupProfile Pc = classify(c);
  CHECK(Pc.h1 == std::vector<Int>{1});
  CHECK_FALSE(Pc.is_cm);
  CHECK(Pc.is_buchsbaum);
}

TEST_CASE("h1 dimensions match the initial-piece gaps") {
  // h1 in degree n counts the monomials of the closure's degree-nd piece
  // missing from I^n itself.
  SumsetCache huck(gs(7, {0, 1, 5, 7}));
  std::vector<Int> h1 = h1_dimensions(huck, 4, 4);
  CHECK(h1 == std::vector<Int>{1, 2, 1});
}

TEST_CASE("full analyze report ties everything together") {
  GeneratorSet huck = gs(7, {0, 1, 5, 7});
  AnalysisReport R = analyze(huck);
  CHECK(R.d == 7);
  CHECK(R.A == std::vector<Int>{0, 1, 5, 7});
  CHECK(R.r_J == 4);
  CHECK(R.regR == 4);
  CHECK(R.regF == 4);
  CHECK(R.s == 3);
  CHECK(R.s_star == 4);
  CHECK(R.s_ini == 4);
  CHECK(R.e == 49);
  CHECK(R.eu_equal);
  CHECK(R.eu_class == EuClass::NeighborClass);
  CHECK_FALSE(R.invariance);
  CHECK_FALSE(R.is_cm);
  CHECK_FALSE(R.is_buchsbaum);
  CHECK(R.h1 == std::vector<Int>{1, 2, 1});
  CHECK(R.rr_generators.empty());

  AnalyzeOptions opt;
  opt.max_n = 3;
  AnalysisReport Rn = analyze(huck, opt);
  REQUIRE(Rn.rr_generators.size() == 3);
  CHECK(Rn.rr_generators[0].n == 1);
  CHECK(Rn.rr_generators[2].n == 3);
  CHECK(Rn.rr_generators[2].t_used == 1);
}
